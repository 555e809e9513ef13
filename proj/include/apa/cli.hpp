#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "apa/checker.hpp"
#include "apa/groth.hpp"
#include "apa/moves.hpp"
#include "apa/tl.hpp"

namespace apa {

namespace cli_detail {

/// One weighted basis diagram per input slot:  n: p1 .. pn = poly
inline std::vector<std::pair<Pairing, DeltaPoly>> parse_inputs(std::istream& in) {
  std::vector<std::pair<Pairing, DeltaPoly>> slots;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto colon = line.find(':');
    auto eq = line.find('=');
    if (colon == std::string::npos || eq == std::string::npos || eq < colon)
      throw Error("inputs line " + std::to_string(lineno) + ": expected 'n: partners = poly'");
    int n = std::stoi(line.substr(0, colon));
    Pairing p(n);
    std::istringstream ps(line.substr(colon + 1, eq - colon - 1));
    for (int q = 1; q <= n; ++q)
      if (!(ps >> p.partner[q]))
        throw Error("inputs line " + std::to_string(lineno) + ": expected " +
                    std::to_string(n) + " partner entries");
    for (int q = 1; q <= n; ++q)
      if (p.partner[q] < 1 || p.partner[q] > n || p.partner[p.partner[q]] != q ||
          p.partner[q] == q)
        throw Error("inputs line " + std::to_string(lineno) + ": not a perfect matching");
    slots.emplace_back(std::move(p), DeltaPoly::parse(line.substr(eq + 1)));
  }
  return slots;
}

inline std::string element_to_text(const TLMap& column_map) {
  // column_map: single column, cod a single box size
  std::ostringstream os;
  int k0 = column_map.cod.at(0);
  const auto& basis = enumerate_basis(k0);
  for (long long r = 0; r < column_map.rows(); ++r) {
    const DeltaPoly& v = column_map.at(r, 0);
    if (v.is_zero()) continue;
    os << k0 << ": " << basis[static_cast<size_t>(r)].to_string() << " = " << v.to_string()
       << '\n';
  }
  if (os.str().empty()) os << k0 << ": 0\n";
  return os.str();
}

}  // namespace cli_detail

/// Command-line front end; returns the process exit status. Exit 0 on
/// success / Proven / all-pass, 1 on NotProven / any-fail, 2 on usage or
/// parse errors.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"anchored planar tangle calculus"};
  app.require_subcommand(1);

  std::string expr_text, expr_text2, inputs_path, preset_name, file_path;
  std::string backend = "tl", family = "all";
  int budget = 0, max_n = 3, trials = 100, max_k = 10;
  std::uint64_t seed = 0;

  auto* cmd_normalize = app.add_subcommand("normalize", "standard form of an expression");
  cmd_normalize->add_option("expr", expr_text)->required();

  auto* cmd_eval = app.add_subcommand("eval", "evaluate in the TL backend");
  cmd_eval->add_option("expr", expr_text)->required();
  cmd_eval->add_option("--inputs", inputs_path, "file of input elements, one line per slot");

  auto* cmd_equiv = app.add_subcommand("equiv", "bounded isotopy equivalence");
  cmd_equiv->add_option("lhs", expr_text)->required();
  cmd_equiv->add_option("rhs", expr_text2)->required();
  cmd_equiv->add_option("--budget", budget)->required();

  auto* cmd_check = app.add_subcommand("check", "relation / equivariance suites");
  std::string what;
  cmd_check->add_option("what", what)->required()->check(CLI::IsMember({"relations", "braid"}));
  cmd_check->add_option("--backend", backend)->check(CLI::IsMember({"tl"}));
  cmd_check->add_option("--family", family);
  cmd_check->add_option("--max-n", max_n);
  cmd_check->add_option("--trials", trials);
  cmd_check->add_option("--seed", seed);

  auto* cmd_box = app.add_subcommand("box", "box-object table of a module tensor category");
  cmd_box->add_option("preset", preset_name);
  cmd_box->add_option("--file", file_path);
  cmd_box->add_option("--max-k", max_k)->required();

  auto* cmd_braid = app.add_subcommand("braid", "ribbon braid arithmetic");
  std::string braid_op, b1, b2, b3;
  cmd_braid->add_option("op", braid_op)->required()->check(CLI::IsMember({"eq", "mul", "compose"}));
  cmd_braid->add_option("arg1", b1)->required();
  cmd_braid->add_option("arg2", b2)->required();
  cmd_braid->add_option("arg3", b3);

  std::vector<const char*> argv;
  argv.push_back("apa");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << e.what() << '\n';
    return 2;
  }

  try {
    if (*cmd_normalize) {
      StandardForm sf = normalize(parse_expr(expr_text));
      out << sf.render() << '\n';
      return 0;
    }
    if (*cmd_eval) {
      ExprPtr e = parse_expr(expr_text);
      TLMap m = tl_eval(e);
      if (inputs_path.empty()) {
        out << m.to_tsv();
        return 0;
      }
      std::ifstream in(inputs_path);
      if (!in) throw Error("cannot open inputs file " + inputs_path);
      auto slots = cli_detail::parse_inputs(in);
      if (slots.size() != m.dom.size())
        throw Error("inputs file has " + std::to_string(slots.size()) + " slots, expression has " +
                    std::to_string(m.dom.size()));
      long long col = 0;
      DeltaPoly coeff(1);
      auto strides = TLMap::strides(m.dom);
      for (size_t s = 0; s < slots.size(); ++s) {
        if (slots[s].first.points() != m.dom[s])
          throw Error("input slot " + std::to_string(s + 1) + " has size " +
                      std::to_string(slots[s].first.points()) + ", expected " +
                      std::to_string(m.dom[s]));
        col += strides[s] * pairing_index(slots[s].first);
        coeff *= slots[s].second;
      }
      TLMap result = TLMap::zero({}, m.cod);
      for (long long r = 0; r < m.rows(); ++r) result.at(r, 0) = m.at(r, col) * coeff;
      out << cli_detail::element_to_text(result);
      return 0;
    }
    if (*cmd_equiv) {
      Equiv verdict = equivalent(parse_expr(expr_text), parse_expr(expr_text2), budget);
      out << (verdict == Equiv::Proven ? "Proven" : "NotProven") << '\n';
      return verdict == Equiv::Proven ? 0 : 1;
    }
    if (*cmd_check) {
      Report rep = what == "relations" ? check_relations(family, max_n)
                                       : check_equivariance(max_n, trials, seed);
      out << rep.to_tsv();
      return rep.all_pass() ? 0 : 1;
    }
    if (*cmd_box) {
      if (preset_name.empty() == file_path.empty())
        throw Error("box: give exactly one of PRESET or --file PATH");
      ModuleTensorData d;
      if (!preset_name.empty()) {
        d = preset(preset_name);
      } else {
        std::ifstream in(file_path);
        if (!in) throw Error("cannot open fusion data file " + file_path);
        std::ostringstream buf;
        buf << in.rdbuf();
        d = load_fusion_data(buf.str());
      }
      out << box_table_tsv(d, max_k);
      return 0;
    }
    if (*cmd_braid) {
      RibbonBraid x = RibbonBraid::parse(b1);
      if (braid_op == "eq") {
        bool equal = x.equals(RibbonBraid::parse(b2));
        out << (equal ? "true" : "false") << '\n';
        return equal ? 0 : 1;
      }
      if (braid_op == "mul") {
        out << x.multiply(RibbonBraid::parse(b2)).render() << '\n';
        return 0;
      }
      // compose B1 I B2
      if (b3.empty()) throw Error("braid compose needs B1 SLOT B2");
      int slot = std::stoi(b2);
      out << x.compose_at(slot, RibbonBraid::parse(b3)).render() << '\n';
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace apa
