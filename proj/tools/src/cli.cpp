#include "minorb/cli/cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "minorb/cli/json_io.hpp"
#include "minorb/cli/tables.hpp"
#include "minorb/cli/text.hpp"
#include "minorb/grading.hpp"
#include "minorb/invariants.hpp"
#include "minorb/parabolic.hpp"
#include "minorb/repdim.hpp"
#include "minorb/rootsys.hpp"

namespace minorb::cli {

namespace {

struct Output {
  json payload;
  std::string text;
};

std::string upper(std::string s) {
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

SimpleType parse_type(const std::string& text, std::ostream& err) {
  const SimpleType t = SimpleType::parse(text);
  const std::string given = upper(text);
  if (!given.empty() && given[0] != t.label()[0]) {
    err << "note: " << given << " is treated as " << t.label() << "; nodes use the " << t.label() << " numbering\n";
  }
  return t;
}

int parse_int(std::string_view s, const std::string& what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("malformed " + what + ": '" + std::string(s) + "'");
  return value;
}

std::vector<int> parse_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_int(std::string_view(text).substr(start, comma - start), what));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

Weight parse_weight(const std::string& text, int rank) {
  Weight w{parse_list(text, "weight")};
  if (static_cast<int>(w.coeffs.size()) != rank) {
    throw std::invalid_argument("weight has " + std::to_string(w.coeffs.size()) + " coordinates, expected " +
                                std::to_string(rank));
  }
  return w;
}

int parse_node(const std::string& text, int rank) {
  const int node = parse_int(text, "node");
  if (node < 1 || node > rank)
    throw std::out_of_range("node " + std::to_string(node) + " outside 1.." + std::to_string(rank));
  return node;
}

std::string components_text(const LeviData& levi) {
  std::string out;
  for (const auto& c : levi.components) out += "component " + c.type.label() + ": " + format_nodes(c.nodes) + "\n";
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Output cmd_cartan(SimpleType t) {
  const IntMatrix c = cartan_matrix(t);
  return {json{{"matrix", encode(c)}}, format_matrix(c)};
}

Output cmd_icartan(SimpleType t) {
  const InverseCartan inv = inverse_cartan(t);
  return {json{{"determinant", inv.determinant}, {"scaled", encode(inv.scaled)}},
          "det = " + std::to_string(inv.determinant) + "\n" + format_matrix(inv.scaled)};
}

Output cmd_roots(SimpleType t) {
  const RootSystem rs(t);
  json roots = json::array();
  std::ostringstream os;
  const auto pos = rs.positive_roots();
  os << pos.size() << " positive roots\n";
  const std::size_t width = std::to_string(rs.highest_root().height()).size();
  for (const Root& r : pos) {
    roots.push_back(encode(r));
    const std::string h = std::to_string(r.height());
    os << std::string(width - h.size(), ' ') << h << "  " << format_weight(Weight{r.coeffs}) << "\n";
  }
  return {json{{"count", pos.size()}, {"roots", roots}, {"highest_root", encode(rs.highest_root())}}, os.str()};
}

Output cmd_dim(SimpleType t, const std::string& weight) {
  const Weight w = parse_weight(weight, t.rank());
  const BigInt d = dim_irrep(t, w);
  return {json{{"weight", encode(w)}, {"dim", encode(d)}}, d.str() + "\n"};
}

Output cmd_dual(SimpleType t, const std::string& weight) {
  const Weight w = parse_weight(weight, t.rank());
  const Weight d = dual_weight(t, w);
  return {json{{"weight", encode(w)}, {"dual", encode(d)}}, format_weight(d) + "\n"};
}

Output cmd_levi(SimpleType t, const std::string& nodes) {
  const RootSystem rs(t);
  const LeviData levi = levi_data(rs, parse_list(nodes, "node list"));
  std::ostringstream os;
  os << "removed: " << format_nodes(levi.removed) << "\n"
     << "kept: " << format_nodes(levi.kept) << "\n"
     << "levi: " << (levi_label(levi).empty() ? "-" : levi_label(levi)) << "\n"
     << components_text(levi)
     << "dim [l,l]: " << levi.dim_levi_ss << "\n"
     << "dim u: " << levi.dim_u << "\n"
     << "codim P: " << levi.codim_p << "\n";
  return {encode(levi), os.str()};
}

Output cmd_grade(SimpleType t, const std::string& node, int modulus) {
  const RootSystem rs(t);
  const GradingReport g = grade_adjoint(rs, parse_node(node, t.rank()));
  json payload = encode(g);
  if (modulus > 0) {
    json res = json::array();
    const auto residues = g.residues(modulus);
    for (const auto& [k, d] : residues) res.push_back({{"residue", k}, {"dim", d}});
    payload["modulus"] = modulus;
    payload["residues"] = res;
    return {payload, format_spectrum(residues) + "\n"};
  }
  return {payload, format_spectrum(g.dims) + "\n"};
}

std::vector<int> flat_coords(std::span<const FactorWeight> weights, int grade) {
  std::vector<int> out;
  for (const auto& fw : weights) out.insert(out.end(), fw.weight.coeffs.begin(), fw.weight.coeffs.end());
  out.push_back(grade);
  return out;
}

Output cmd_branch(SimpleType t, const std::string& node) {
  const RootSystem rs(t);
  const BranchReport b = branch_adjoint(rs, parse_node(node, t.rank()));
  std::ostringstream os;
  os << "levi: " << levi_label(b.levi) << "\n" << components_text(b.levi);
  BigInt total = 0;
  std::vector<Term> terms;
  for (const auto& [k, modules] : b.grade_modules) {
    BigInt sum = 0;
    std::string parts;
    for (const auto& m : modules) {
      sum += m.dim;
      if (!parts.empty()) parts += " + ";
      parts += format_factor_weights(m.highest) + " " + m.dim.str();
      terms.push_back({1, flat_coords(m.highest, k)});
      if (k > 0) terms.push_back({1, flat_coords(dual_weight(m.highest), -k)});
    }
    total += k == 0 ? sum : 2 * sum;
    os << "grade " << k << " (" << sum << "): " << parts << "\n";
  }
  os << "total: " << total << "\n\n";
  std::map<std::vector<int>, std::int64_t> merged;
  for (const auto& term : terms) merged[term.coords] += term.multiplicity;
  std::vector<Term> grouped;
  for (const auto& [coords, mult] : merged) grouped.push_back({mult, coords});
  os << format_terms(std::move(grouped));
  json payload = encode(b);
  payload["total"] = encode(total);
  return {payload, os.str()};
}

Output cmd_valpha(SimpleType t, const std::string& node) {
  const RootSystem rs(t);
  const VAlphaWeights v = lowest_weight_of_v_alpha(rs, parse_node(node, t.rank()));
  std::ostringstream os;
  os << "levi: " << levi_label(v.levi) << "\n"
     << components_text(v.levi)
     << "lowest: " << format_factor_weights(v.lowest) << "\n"
     << "highest: " << format_factor_weights(v.highest) << "\n"
     << "dim: " << v.dim << "\n";
  return {encode(v), os.str()};
}

Output cmd_minorbit(SimpleType t, const std::string& weight) {
  const RootSystem rs(t);
  const Weight w = parse_weight(weight, t.rank());
  const LeviData levi = parabolic_of_weight(rs, w);
  const OrbitType type = orbit_type(w);
  const int dim_orbit = dim_min_orbit(rs, w);
  const BigInt dim_module = dim_irrep(rs, w);
  const bool smooth = closure_is_smooth(rs, w);
  std::ostringstream os;
  os << "weight: " << format_weight(w) << "\n"
     << "primitive: " << format_weight(type.primitive) << "\n"
     << "multiple: " << type.multiple << "\n"
     << "parabolic: removed " << format_nodes(levi.removed) << ", levi " << levi_label(levi) << "\n"
     << "dim orbit: " << dim_orbit << "\n"
     << "dim module: " << dim_module << "\n"
     << "smooth closure: " << yes_no(smooth) << "\n";
  return {json{{"weight", encode(w)},
               {"primitive", encode(type.primitive)},
               {"multiple", type.multiple},
               {"levi", encode(levi)},
               {"dim_orbit", dim_orbit},
               {"dim_module", encode(dim_module)},
               {"smooth", smooth}},
          os.str()};
}

std::string optional_text(const std::optional<int>& v) { return v ? std::to_string(*v) : "inf"; }

std::string witness_text(const ExistenceWitness& w) {
  std::string out = factors_label(w.reductive);
  if (!w.unipotent_support.empty()) out += " + u{" + format_nodes(w.unipotent_support) + "}";
  return out;
}

Output cmd_invariants(SimpleType t) {
  const InvariantReport r = full_report(t);
  std::ostringstream os;
  os << "dim g: " << r.dim_g << "\n"
     << "m: " << r.min.m << " (p " << r.min.p << ", argmin " << format_nodes(r.min.argmin) << ")\n"
     << "r: " << r.r.codim << " (H " << factors_label(r.r.factors) << ", dim " << r.r.dim_h << ")\n"
     << "d: " << r.d.d << " (witness " << witness_text(r.d.witness) << ", codim " << r.d.witness.codim << ")\n"
     << "smooth closures:";
  for (std::size_t i = 0; i < r.smooth_closure.size(); ++i) os << " w" << i + 1 << ":" << yes_no(r.smooth_closure[i]);
  os << "\n"
     << "adjoint nullcone dim: " << r.nullcone_dim << "\n"
     << "bounds:\n";
  for (const auto& c : r.d.certificates) {
    switch (c.source) {
      case BoundSource::Reductive:
        os << "  reductive: " << c.value << "\n";
        break;
      case BoundSource::Fundamental:
        os << "  fundamental " << format_nodes(c.nodes) << ": (" << c.dim_u << " + 1) + min(" << *c.dim_v_alpha
           << ", " << optional_text(c.levi_r) << ") = " << c.value << "\n";
        break;
      case BoundSource::Support:
        os << "  support " << format_nodes(c.nodes) << ": " << c.dim_u << " + 2 = " << c.value << "\n";
        break;
    }
  }
  return {encode(r), os.str()};
}

Output cmd_table(int number, int max_rank) {
  const TableReport table = build_table(number, max_rank);
  return {encode(table), render_text(table)};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Root systems, parabolic subgroups and minimal orbits of simple groups", "minorb"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Print a JSON envelope instead of text");

  std::string type_text;
  std::string arg;
  int modulus = 0;
  int table_number = 0;
  int max_rank = 12;

  auto add = [&](const std::string& name, const std::string& desc, const std::string& arg_name) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->fallthrough();
    if (name != "table") sub->add_option("type", type_text, "Simple type, e.g. E8")->required();
    if (!arg_name.empty()) sub->add_option(arg_name, arg)->required();
    return sub;
  };
  add("cartan", "Cartan matrix", "");
  add("icartan", "det(C) * C^-1 and det(C)", "");
  add("roots", "Positive roots by height", "");
  add("dim", "Dimension of an irreducible module", "weight");
  add("dual", "Highest weight of the dual module", "weight");
  add("levi", "Levi data of P(R); nodes comma-separated, empty for none", "nodes");
  add("grade", "Adjoint spectrum under a node grading", "node")
      ->add_option("--mod", modulus, "Reduce grades modulo N")
      ->check(CLI::PositiveNumber);
  add("branch", "Adjoint module under the Levi of a maximal parabolic", "node");
  add("valpha", "Lowest and highest weight of V(alpha_i)", "node");
  add("minorbit", "Minimal orbit of a highest weight vector", "weight");
  add("invariants", "m_G, r_G, d_G and their certificates", "");
  CLI::App* table = add("table", "Regenerate a table of invariants", "");
  table->add_option("number", table_number, "2, 3, 4 or 5")->required()->check(CLI::Range(2, 5));
  table->add_option("--max-rank", max_rank, "Largest rank of classical families")->check(CLI::Range(1, 24));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    std::optional<SimpleType> type;
    if (command != "table") type = parse_type(type_text, err);

    static const std::map<std::string, std::function<Output(SimpleType, const std::string&)>> typed = {
        {"cartan", [](SimpleType t, const std::string&) { return cmd_cartan(t); }},
        {"icartan", [](SimpleType t, const std::string&) { return cmd_icartan(t); }},
        {"roots", [](SimpleType t, const std::string&) { return cmd_roots(t); }},
        {"dim", cmd_dim},
        {"dual", cmd_dual},
        {"levi", cmd_levi},
        {"branch", cmd_branch},
        {"valpha", cmd_valpha},
        {"minorbit", cmd_minorbit},
        {"invariants", [](SimpleType t, const std::string&) { return cmd_invariants(t); }},
    };

    Output result;
    if (command == "table") {
      result = cmd_table(table_number, max_rank);
    } else if (command == "grade") {
      result = cmd_grade(*type, arg, modulus);
    } else {
      result = typed.at(command)(*type, arg);
    }

    if (as_json) {
      json envelope{{"format_version", kFormatVersion},
                    {"command", command},
                    {"args", args},
                    {"type", type ? json(type->label()) : json(nullptr)},
                    {"payload", result.payload}};
      out << envelope.dump(2) << "\n";
    } else {
      out << result.text;
    }
    return 0;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
  }
  return 2;
}

}  // namespace minorb::cli
