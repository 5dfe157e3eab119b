#include "minorb/cli/json_io.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace minorb::cli {

namespace {

json encode_ints(const std::vector<int>& v) { return json(v); }

std::vector<int> ints(const json& j) { return j.get<std::vector<int>>(); }

std::optional<int> optional_int(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<int>();
}

json encode_optional(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

BoundSource source_from_string(const std::string& s) {
  for (BoundSource b : {BoundSource::Reductive, BoundSource::Fundamental, BoundSource::Support})
    if (s == to_string(b)) return b;
  throw std::invalid_argument("unknown bound source: " + s);
}

}  // namespace

json encode(const BigInt& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max())
    return json(static_cast<std::int64_t>(value));
  return json(value.str());
}

json encode(SimpleType type) { return json(type.label()); }

json encode(const IntMatrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return rows;
}

json encode(const Root& root) { return json{{"coeffs", root.coeffs}, {"height", root.height()}}; }

json encode(const Weight& weight) { return encode_ints(weight.coeffs); }

json encode(const Component& component) {
  return json{{"type", encode(component.type)}, {"nodes", component.nodes}};
}

json encode(const FactorWeight& fw) { return json{{"type", encode(fw.type)}, {"weight", encode(fw.weight)}}; }

json encode(std::span<const FactorWeight> weights) {
  json out = json::array();
  for (const auto& fw : weights) out.push_back(encode(fw));
  return out;
}

json encode(const LeviData& levi) {
  json comps = json::array();
  for (const auto& c : levi.components) comps.push_back(encode(c));
  return json{{"type", encode(levi.type)},
              {"removed", levi.removed},
              {"kept", levi.kept},
              {"components", comps},
              {"dim_levi_ss", levi.dim_levi_ss},
              {"dim_u", levi.dim_u},
              {"codim_p", levi.codim_p}};
}

json encode(const GradingReport& grading) {
  json dims = json::array();
  for (const auto& [k, d] : grading.dims) dims.push_back({{"grade", k}, {"dim", d}});
  return json{{"type", encode(grading.type)}, {"node", grading.node}, {"dims", dims}, {"max_grade", grading.max_grade}};
}

json encode(const BranchReport& branch) {
  json grades = json::array();
  for (const auto& [k, modules] : branch.grade_modules) {
    json ms = json::array();
    for (const auto& m : modules) ms.push_back({{"highest", encode(std::span<const FactorWeight>(m.highest))}, {"dim", encode(m.dim)}});
    grades.push_back({{"grade", k}, {"modules", ms}});
  }
  return json{{"type", encode(branch.type)}, {"node", branch.node}, {"levi", encode(branch.levi)}, {"grades", grades}};
}

json encode(const VAlphaWeights& valpha) {
  return json{{"levi", encode(valpha.levi)},
              {"lowest", encode(std::span<const FactorWeight>(valpha.lowest))},
              {"highest", encode(std::span<const FactorWeight>(valpha.highest))},
              {"dim", encode(valpha.dim)}};
}

json encode(const Factor& factor) {
  if (const auto* t = std::get_if<Torus>(&factor)) return json{{"torus", t->rank}};
  return json{{"simple", encode(std::get<SimpleType>(factor))}};
}

json encode(const MinParabolic& min) { return json{{"m", min.m}, {"p", min.p}, {"argmin", min.argmin}}; }

json encode(const ReductiveWitness& r) {
  json fs = json::array();
  for (const auto& f : r.factors) fs.push_back(encode(f));
  return json{{"factors", fs}, {"label", factors_label(r.factors)}, {"dim_h", r.dim_h}, {"codim", r.codim}};
}

json encode(const BoundCertificate& cert) {
  return json{{"source", to_string(cert.source)},
              {"nodes", cert.nodes},
              {"dim_u", cert.dim_u},
              {"dim_v_alpha", encode_optional(cert.dim_v_alpha)},
              {"levi_r", encode_optional(cert.levi_r)},
              {"value", cert.value}};
}

json encode(const ExistenceWitness& witness) {
  json fs = json::array();
  for (const auto& f : witness.reductive) fs.push_back(encode(f));
  return json{{"reductive", fs},
              {"unipotent_support", witness.unipotent_support},
              {"dim_u", witness.dim_u},
              {"codim", witness.codim}};
}

json encode(const DResult& d) {
  json certs = json::array();
  for (const auto& c : d.certificates) certs.push_back(encode(c));
  return json{{"d", d.d},
              {"certificates", certs},
              {"witness", encode(d.witness)},
              {"supports_examined", d.supports_examined}};
}

json encode(const InvariantReport& report) {
  return json{{"type", encode(report.type)},
              {"dim_g", report.dim_g},
              {"min", encode(report.min)},
              {"r", encode(report.r)},
              {"d", encode(report.d)},
              {"smooth_closure", report.smooth_closure},
              {"nullcone_dim", report.nullcone_dim},
              {"d_below_r", report.d_below_r}};
}

template <>
BigInt decode<BigInt>(const json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  return BigInt(j.get<std::int64_t>());
}

template <>
SimpleType decode<SimpleType>(const json& j) {
  return SimpleType::parse(j.get<std::string>());
}

template <>
IntMatrix decode<IntMatrix>(const json& j) {
  const int rows = static_cast<int>(j.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(j.at(0).size());
  IntMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = j.at(r).at(c).get<std::int64_t>();
  return m;
}

template <>
Root decode<Root>(const json& j) {
  return Root{ints(j.at("coeffs"))};
}

template <>
Weight decode<Weight>(const json& j) {
  return Weight{ints(j)};
}

template <>
Component decode<Component>(const json& j) {
  return Component{decode<SimpleType>(j.at("type")), ints(j.at("nodes"))};
}

template <>
FactorWeight decode<FactorWeight>(const json& j) {
  return FactorWeight{decode<SimpleType>(j.at("type")), decode<Weight>(j.at("weight"))};
}

template <>
std::vector<FactorWeight> decode<std::vector<FactorWeight>>(const json& j) {
  std::vector<FactorWeight> out;
  for (const auto& e : j) out.push_back(decode<FactorWeight>(e));
  return out;
}

template <>
LeviData decode<LeviData>(const json& j) {
  LeviData out{decode<SimpleType>(j.at("type")), ints(j.at("removed")), ints(j.at("kept")), {}, 0, 0, 0};
  for (const auto& c : j.at("components")) out.components.push_back(decode<Component>(c));
  out.dim_levi_ss = j.at("dim_levi_ss").get<int>();
  out.dim_u = j.at("dim_u").get<int>();
  out.codim_p = j.at("codim_p").get<int>();
  return out;
}

template <>
GradingReport decode<GradingReport>(const json& j) {
  GradingReport out{decode<SimpleType>(j.at("type")), j.at("node").get<int>(), {}, j.at("max_grade").get<int>()};
  for (const auto& e : j.at("dims")) out.dims[e.at("grade").get<int>()] = e.at("dim").get<int>();
  return out;
}

template <>
BranchReport decode<BranchReport>(const json& j) {
  BranchReport out{decode<SimpleType>(j.at("type")), j.at("node").get<int>(), decode<LeviData>(j.at("levi")), {}};
  for (const auto& g : j.at("grades")) {
    auto& modules = out.grade_modules[g.at("grade").get<int>()];
    for (const auto& m : g.at("modules"))
      modules.push_back({decode<std::vector<FactorWeight>>(m.at("highest")), decode<BigInt>(m.at("dim"))});
  }
  return out;
}

template <>
VAlphaWeights decode<VAlphaWeights>(const json& j) {
  return VAlphaWeights{decode<LeviData>(j.at("levi")), decode<std::vector<FactorWeight>>(j.at("lowest")),
                       decode<std::vector<FactorWeight>>(j.at("highest")), decode<BigInt>(j.at("dim"))};
}

template <>
Factor decode<Factor>(const json& j) {
  if (j.contains("torus")) return Torus{j.at("torus").get<int>()};
  return decode<SimpleType>(j.at("simple"));
}

template <>
MinParabolic decode<MinParabolic>(const json& j) {
  return MinParabolic{j.at("m").get<int>(), j.at("p").get<int>(), ints(j.at("argmin"))};
}

template <>
ReductiveWitness decode<ReductiveWitness>(const json& j) {
  ReductiveWitness out;
  for (const auto& f : j.at("factors")) out.factors.push_back(decode<Factor>(f));
  out.dim_h = j.at("dim_h").get<int>();
  out.codim = j.at("codim").get<int>();
  return out;
}

template <>
BoundCertificate decode<BoundCertificate>(const json& j) {
  BoundCertificate out;
  out.source = source_from_string(j.at("source").get<std::string>());
  out.nodes = ints(j.at("nodes"));
  out.dim_u = j.at("dim_u").get<int>();
  out.dim_v_alpha = optional_int(j.at("dim_v_alpha"));
  out.levi_r = optional_int(j.at("levi_r"));
  out.value = j.at("value").get<int>();
  return out;
}

template <>
ExistenceWitness decode<ExistenceWitness>(const json& j) {
  ExistenceWitness out;
  for (const auto& f : j.at("reductive")) out.reductive.push_back(decode<Factor>(f));
  out.unipotent_support = ints(j.at("unipotent_support"));
  out.dim_u = j.at("dim_u").get<int>();
  out.codim = j.at("codim").get<int>();
  return out;
}

template <>
DResult decode<DResult>(const json& j) {
  DResult out;
  out.d = j.at("d").get<int>();
  for (const auto& c : j.at("certificates")) out.certificates.push_back(decode<BoundCertificate>(c));
  out.witness = decode<ExistenceWitness>(j.at("witness"));
  out.supports_examined = j.at("supports_examined").get<std::size_t>();
  return out;
}

template <>
InvariantReport decode<InvariantReport>(const json& j) {
  InvariantReport out{decode<SimpleType>(j.at("type")), j.at("dim_g").get<int>(), decode<MinParabolic>(j.at("min")),
                      decode<ReductiveWitness>(j.at("r")), decode<DResult>(j.at("d")),
                      j.at("smooth_closure").get<std::vector<bool>>(), j.at("nullcone_dim").get<int>(),
                      j.at("d_below_r").get<bool>()};
  return out;
}

}  // namespace minorb::cli
