#include "cgt/report.hpp"

namespace cgt {

Json json_group(const PermGroup& g) {
  Json j;
  j["degree"] = g.degree();
  j["order"] = g.order();
  Json gens = Json::array();
  for (const auto& p : g.generators()) gens.push_back(p.to_cycle_string());
  j["generators"] = gens;
  return j;
}

Json json_certificate(const CarterCertificate& c) {
  Json j;
  j["lower_central_orders"] = c.lower_central_orders;
  j["normalizer_order"] = c.normalizer_order;
  return j;
}

Json json_witness(const CarterWitness& w) {
  Json j;
  j["where"] = w.where;
  j["label"] = w.label;
  j["group"] = json_group(w.group);
  j["brute_confirmed"] = w.brute_confirmed;
  return j;
}

Json json_outcome(const CarterOutcome& o) {
  Json j;
  j["status"] = o.exists ? "exists" : "not_exists";
  if (o.subgroup) j["subgroup"] = json_group(*o.subgroup);
  if (o.certificate) j["certificate"] = json_certificate(*o.certificate);
  if (o.witness) j["witness"] = json_witness(*o.witness);
  j["flags"] = o.flags;
  return j;
}

Json json_chief_series(const ChiefSeriesData& s) {
  Json j;
  Json terms = Json::array();
  for (const auto& t : s.terms) terms.push_back(t.order());
  j["term_orders"] = terms;
  Json factors = Json::array();
  for (const auto& f : s.factors) {
    Json jf;
    jf["order"] = f.order;
    jf["multiplicity"] = f.multiplicity;
    jf["type"] = f.label.to_string();
    factors.push_back(jf);
  }
  j["factors"] = factors;
  return j;
}

Json json_condition_e(const ConditionEReport& r) {
  Json j;
  j["satisfied"] = r.satisfied;
  Json cells = Json::array();
  for (const auto& c : r.cells) {
    Json jc;
    jc["level"] = c.level;
    jc["factor"] = c.factor;
    jc["aut_order"] = c.aut_order;
    jc["method"] = c.method;
    jc["exists"] = c.exists;
    cells.push_back(jc);
  }
  j["cells"] = cells;
  j["level_notes"] = r.level_notes;
  if (r.witness) j["witness"] = json_witness(*r.witness);
  j["flags"] = r.flags;
  return j;
}

Json json_example(const ExampleReport& r) {
  Json j;
  j["group_degree"] = r.group_degree;
  j["group_order"] = r.group_order;
  Json sts = Json::array();
  for (const auto& st : r.statements) {
    Json js;
    js["statement"] = st.number;
    js["claim"] = st.claim;
    js["pass"] = st.pass;
    js["details"] = st.details;
    sts.push_back(js);
  }
  j["statements"] = sts;
  j["all_pass"] = r.all_pass;
  j["condition_e"] = json_condition_e(r.condition_e);
  j["outcome"] = json_outcome(r.outcome);
  return j;
}

}  // namespace cgt
