#include "hypunits/report.hpp"

#include <algorithm>

#include "hypunits/error.hpp"

namespace hypunits {

namespace {

Json one_based(const ElemSet& xs) {
  Json a = Json::array();
  for (auto x : xs) a.push_back(x + 1);
  return a;
}

ElemSet zero_based(const Json& a) {
  ElemSet out;
  for (const auto& x : a) out.push_back(static_cast<Elem>(x.get<int>() - 1));
  return out;
}

Json vec_json(const QVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rational_string(x));
  return a;
}

Json poly_json(const QPoly& p) {
  Json a = Json::array();  // constant term first
  for (const auto& c : p.coeffs()) a.push_back(rational_string(c));
  return a;
}

template <class E>
E enum_from(const std::string& s, std::initializer_list<E> all) {
  for (E e : all)
    if (s == to_string(e)) return e;
  throw Error(ErrorCode::MalformedInput, "unknown tag '" + s + "'");
}

}  // namespace

std::string rational_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& s) {
  Rational q(s);
  q.canonicalize();
  return q;
}

Json to_json(const CayleyTable& s, const GreenData& g, const PrincipalSeries& ps) {
  Json j;
  j["order"] = s.order();
  j["zero"] = s.zero() ? Json(*s.zero() + 1) : Json(nullptr);
  j["identity"] = s.identity() ? Json(*s.identity() + 1) : Json(nullptr);
  j["idempotents"] = one_based(g.idempotents);
  for (const char* rel : {"R", "L", "H", "J"}) {
    const Partition& p = rel[0] == 'R' ? g.R : rel[0] == 'L' ? g.L : rel[0] == 'H' ? g.H : g.J;
    Json a = Json::array();
    for (const auto& c : p) a.push_back(one_based(c));
    j[rel] = a;
  }
  Json chain = Json::array();
  for (const auto& c : ps.chain) chain.push_back(one_based(c));
  j["principal_series"] = chain;
  Json factors = Json::array();
  for (const auto& f : ps.factors) {
    Json fj;
    fj["j_class"] = one_based(f.j_class);
    fj["recognition"] = recognition_name(f.recognition);
    if (const auto* r = std::get_if<FactorRees>(&f.recognition)) {
      fj["structural_group_order"] = r->params.structural_group.order();
      fj["rows"] = r->params.rows;
      fj["cols"] = r->params.cols;
      fj["sandwich"] = r->params.sandwich;
    } else if (const auto* gr = std::get_if<FactorGroup>(&f.recognition)) {
      fj["group_order"] = gr->group.order();
    } else if (const auto* gz = std::get_if<FactorGroupWithZero>(&f.recognition)) {
      fj["group_order"] = gz->group.order();
    }
    factors.push_back(fj);
  }
  j["principal_factors"] = factors;
  return j;
}

Json to_json(const ClassificationReport& r) {
  Json j;
  j["verdict"] = to_string(r.verdict);
  j["theorem_path"] = to_string(r.theorem_path);
  Json fc = Json::array();
  for (const auto& c : r.factor_certificates) {
    Json cj;
    cj["j_class"] = one_based(c.j_class);
    cj["recognition"] = c.recognition;
    cj["identified"] = c.identified;
    cj["list"] = c.list;
    cj["allowed"] = c.allowed;
    fc.push_back(cj);
  }
  j["factor_certificates"] = fc;
  if (r.k_certificate) {
    j["K_certificate"] = {{"name", r.k_certificate->name},
                          {"list", r.k_certificate->list},
                          {"elements", one_based(r.k_certificate->elements)}};
  } else {
    j["K_certificate"] = nullptr;
  }
  j["t_type"] = r.t_type ? Json(to_string(*r.t_type)) : Json(nullptr);
  if (r.lambda_mu) {
    j["lambda_mu"] = {{"lambda", rational_string(r.lambda_mu->lambda)},
                      {"mu", rational_string(r.lambda_mu->mu)},
                      {"sum", rational_string(r.lambda_mu->sum())}};
  } else {
    j["lambda_mu"] = nullptr;
  }
  j["notes"] = r.notes;
  return j;
}

ClassificationReport classification_from_json(const Json& j) {
  ClassificationReport r;
  r.verdict = enum_from<PaperVerdict>(j.at("verdict").get<std::string>(),
                                      {PaperVerdict::YesPerPaper, PaperVerdict::NoPerPaper, PaperVerdict::OutOfTheoremScope});
  r.theorem_path = enum_from<TheoremPath>(j.at("theorem_path").get<std::string>(),
                                          {TheoremPath::Thm2, TheoremPath::Thm3, TheoremPath::Thm4, TheoremPath::None});
  for (const auto& cj : j.at("factor_certificates")) {
    FactorCertificate c;
    c.j_class = zero_based(cj.at("j_class"));
    c.recognition = cj.at("recognition").get<std::string>();
    c.identified = cj.at("identified").get<std::string>();
    c.list = cj.at("list").get<std::string>();
    c.allowed = cj.at("allowed").get<bool>();
    r.factor_certificates.push_back(std::move(c));
  }
  if (!j.at("K_certificate").is_null()) {
    const auto& k = j["K_certificate"];
    r.k_certificate = KCertificate{k.at("name").get<std::string>(), k.at("list").get<std::string>(),
                                   zero_based(k.at("elements"))};
  }
  if (!j.at("t_type").is_null())
    r.t_type = enum_from<TType>(j["t_type"].get<std::string>(), {TType::T2, TType::T2Prime, TType::T2Hat});
  if (!j.at("lambda_mu").is_null())
    r.lambda_mu = LambdaMu{parse_rational(j["lambda_mu"].at("lambda").get<std::string>()),
                           parse_rational(j["lambda_mu"].at("mu").get<std::string>())};
  r.notes = j.at("notes").get<std::vector<std::string>>();
  return r;
}

Json to_json(const AlgebraVerdict& v) {
  Json j;
  j["hyperbolic"] = to_string(v.hyperbolic);
  j["shape"] = to_string(v.shape);
  Json src = Json::array();
  for (const auto& s : v.infinite_sources)
    src.push_back({{"source", s.source}, {"tag", to_string(s.tag)}, {"justification", s.justification}});
  j["infinite_sources"] = src;
  j["certificates"] = v.certificates;
  if (v.analysis) {
    const auto& an = *v.analysis;
    j["dim"] = an.algebra.dim;
    j["unity_adjoined"] = an.algebra.unity_adjoined;
    j["associative"] = an.alt.associative;
    j["radical_dim"] = an.split.radical_dim;
    j["radical_central"] = an.split.radical_central;
    Json comps = Json::array();
    for (std::size_t k = 0; k < an.descriptors.size(); ++k) {
      const auto& d = an.descriptors[k];
      Json c;
      c["dim"] = d.dim;
      c["kind"] = to_string(d.kind);
      c["center_minpoly"] = poly_json(d.center_minpoly);
      c["signature"] = {d.r1, d.r2};
      c["dim_over_center"] = d.dim_over_center;
      if (d.quaternion_invariants)
        c["quaternion_invariants"] = {rational_string(d.quaternion_invariants->first),
                                      rational_string(d.quaternion_invariants->second)};
      c["unit_class"] = to_string(d.unit_class.tag);
      c["justification"] = d.unit_class.justification;
      c["idempotent"] = vec_json(an.decomposition.idempotents[k]);
      if (!d.note.empty()) c["note"] = d.note;
      comps.push_back(c);
    }
    j["components"] = comps;
  }
  return j;
}

Json to_json(const CrosscheckRecord& r, const CayleyTable* table) {
  Json j;
  j["input"] = r.input_id;
  if (table) {
    Json rows = Json::array();
    for (std::size_t x = 0; x < table->order(); ++x) {
      Json row = Json::array();
      for (auto v : table->row(x)) row.push_back(v + 1);
      rows.push_back(row);
    }
    j["table"] = rows;
  }
  j["paper_verdict"] = to_string(r.paper.verdict);
  j["oracle_verdict"] = to_string(r.oracle.hyperbolic);
  j["agreement"] = to_string(r.agreement);
  j["discrepancy_note"] = r.discrepancy_note;
  j["paper"] = to_json(r.paper);
  j["oracle"] = to_json(r.oracle);
  return j;
}

Json to_json(const RefuteReport& r) {
  Json j;
  if (r.witness) {
    j["witness"] = {{"u", vec_json(r.witness->u)},
                    {"v", vec_json(r.witness->v)},
                    {"exact", r.witness->exact},
                    {"minor", r.witness->minor},
                    {"coordinates", r.witness->coordinates}};
  } else {
    j["witness"] = nullptr;
  }
  j["search_space"] = r.search_space;
  j["exhaustive_box"] = r.exhaustive_box;
  j["vectors_examined"] = r.vectors_examined;
  j["units_found"] = r.units_found;
  j["infinite_order_units"] = r.infinite_order_units;
  j["pair_cap_hit"] = r.pair_cap_hit;
  return j;
}

Json to_json(const LoopClassification& c) {
  Json j;
  const auto& a = c.analysis;
  j["moufang"] = a.moufang;
  j["associative"] = a.associative;
  j["ra_loop"] = a.ra_loop;
  j["element_orders"] = a.element_orders;
  j["subloop_count"] = a.subloops.size();
  j["all_subloops_normal"] = std::all_of(a.normal_flags.begin(), a.normal_flags.end(), [](bool b) { return b; });
  j["hamiltonian_moufang_2loop"] = a.hamiltonian_moufang_2loop;
  j["non_normal_witness"] = c.non_normal_witness ? one_based(*c.non_normal_witness) : Json(nullptr);
  if (c.unit_check) {
    j["normalized_unit_check"] = {{"unit", c.unit_check->unit ? vec_json(*c.unit_check->unit) : Json(nullptr)},
                                  {"search_space", c.unit_check->search_space}};
  }
  j["report"] = to_json(c.report);
  return j;
}

Json to_json(const CensusRow& row, bool include_runtime) {
  Json j;
  j["order"] = row.order;
  j["count"] = row.count;
  const char* paper[] = {"YesPerPaper", "NoPerPaper", "OutOfTheoremScope"};
  const char* oracle[] = {"Yes", "No", "Indeterminate"};
  for (std::size_t p = 0; p < 3; ++p)
    for (std::size_t o = 0; o < 3; ++o) j[std::string(paper[p]) + "/" + oracle[o]] = row.histogram[p][o];
  j["seconds"] = include_runtime ? Json(row.seconds) : Json(nullptr);
  return j;
}

}  // namespace hypunits
