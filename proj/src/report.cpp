#include "ihull/report.hpp"

#include <algorithm>
#include <cstdint>

#include "json.hpp"

#include "ihull/hull.hpp"
#include "ihull/spectrum.hpp"
#include "ihull/strings.hpp"

namespace ihull {
namespace {

using json = nlohmann::ordered_json;

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json preamble(const std::string& command, const std::string& digest) {
  json j;
  j["version"] = kVersion;
  j["command"] = command;
  j["digest"] = digest;
  return j;
}

json mask_names(const Semigroup& sg, Mask m) {
  json out = json::array();
  for_each_bit(m, [&](Elem i) { out.push_back(sg.name(i)); });
  return out;
}

json uelem_name(const Semigroup& sg, UElem u) {
  return u.is_unit() ? json("1") : json(sg.name(u.elem()));
}

// Sorted (source, target) pair list; the canonical text form of a
// partial bijection.
json pb_pairs(const PartialBijection& f) {
  json out = json::array();
  for_each_bit(f.domain(), [&](Elem x) {
    out.push_back(json::array({x, f.at(x)}));
  });
  return out;
}

json triple(const Semigroup& sg, const std::optional<TripleWitness>& w) {
  if (!w) return nullptr;
  json j;
  j["r"] = sg.name(w->r);
  j["s"] = sg.name(w->s);
  j["t"] = sg.name(w->t);
  return j;
}

json lambda_json(const Semigroup& sg, const LambdaSet& lam) {
  json j;
  j["unit"] = lam.unit;
  j["elements"] = mask_names(sg, lam.elems);
  return j;
}

}  // namespace

std::string input_digest(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001b3ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

std::string classify_report(const Semigroup& sg, const std::string& digest) {
  json j = preamble("classify", digest);
  j["elements"] = json::array();
  for (Elem i = 0; i < sg.size(); ++i) j["elements"].push_back(sg.name(i));
  j["zero"] = sg.name(sg.zero());

  PropertyReport pr = classify(sg);
  json props;
  props["zero_left_cancellative"] = pr.zero_left_cancellative;
  props["zero_right_cancellative"] = pr.zero_right_cancellative;
  props["categorical_at_zero"] = pr.categorical_at_zero;
  props["right_reductive"] = pr.right_reductive;
  props["right_local_units"] = pr.has_right_local_units;
  j["properties"] = props;

  json wit;
  wit["left"] = triple(sg, pr.left_witness);
  wit["right"] = triple(sg, pr.right_witness);
  wit["categorical"] = triple(sg, pr.categorical_witness);
  if (pr.categorical_pair)
    wit["categorical_products"] =
        json::array({sg.name(pr.categorical_pair->first),
                     sg.name(pr.categorical_pair->second)});
  else
    wit["categorical_products"] = nullptr;
  if (pr.reductive_witness)
    wit["reductive"] = json::array({sg.name(pr.reductive_witness->first),
                                    sg.name(pr.reductive_witness->second)});
  else
    wit["reductive"] = nullptr;
  wit["local_unit"] =
      pr.local_unit_witness ? json(sg.name(*pr.local_unit_witness)) : json();
  j["witnesses"] = wit;

  j["nonzero_idempotents"] = mask_names(sg, pr.nonzero_idempotents);
  j["unit"] = pr.unit ? json(sg.name(*pr.unit)) : json();
  j["orthogonal_idempotents"] = pr.orthogonal_idempotents;

  json lc;
  std::optional<LcmFailure> fail;
  lc["admits"] = admits_lcms(sg, &fail);
  lc["failure"] = fail ? json::array({sg.name(fail->s), sg.name(fail->t)})
                       : json();
  json pairs = json::array();
  for (Elem s = 0; s < sg.size(); ++s) {
    if (sg.is_zero(s)) continue;
    for (Elem t = s; t < sg.size(); ++t) {
      if (sg.is_zero(t)) continue;
      json p;
      p["s"] = sg.name(s);
      p["t"] = sg.name(t);
      if (auto res = lcm(sg, s, t)) {
        json w = json::array();
        for (Elem r : res->witnesses) w.push_back(sg.name(r));
        p["witnesses"] = w;
        p["canonical"] = sg.name(res->canonical);
      } else {
        p["witnesses"] = json::array();
        p["canonical"] = nullptr;
      }
      pairs.push_back(p);
    }
  }
  lc["pairs"] = pairs;
  j["lcm"] = lc;

  j["violations"] = json::array();
  return dump(j);
}

std::string hull_report(const Semigroup& sg, const std::string& digest) {
  json j = preamble("hull", digest);
  HullData hull = build_hull(sg);

  json fv = json::array();
  for (std::size_t i = 0; i < hull.f_values.size(); ++i) {
    json e;
    e["members"] = mask_names(sg, hull.f_values[i]);
    e["witness"] = lambda_json(sg, hull.f_witnesses[i]);
    fv.push_back(e);
  }
  j["f_values"] = fv;

  json els = json::array();
  for (const auto& h : hull.elements) {
    json e;
    e["pairs"] = pb_pairs(h.map);
    json ws = json::array();
    for (const auto& w : h.witnesses) {
      json wj;
      wj["u"] = uelem_name(sg, w.u);
      wj["f"] = mask_names(sg, hull.f_values[w.f_index]);
      wj["v"] = uelem_name(sg, w.v);
      ws.push_back(wj);
    }
    e["witnesses"] = ws;
    els.push_back(e);
  }
  j["elements"] = els;

  auto ideal = e_one_ideal(sg, hull);
  json sets = json::array();
  for (std::size_t i = 0; i < hull.sets.size(); ++i) {
    json e;
    e["members"] = mask_names(sg, hull.sets[i].members);
    json ws = json::array();
    for (const auto& w : hull.sets[i].witnesses) {
      json wj;
      wj["u"] = uelem_name(sg, w.u);
      wj["f"] = mask_names(sg, hull.f_values[w.f_index]);
      ws.push_back(wj);
    }
    e["witnesses"] = ws;
    e["in_e_one_ideal"] = static_cast<bool>(ideal[i]);
    sets.push_back(e);
  }
  j["sets"] = sets;

  json counts;
  counts["elements"] = hull.elements.size();
  counts["sets"] = hull.sets.size();
  counts["f_values"] = hull.f_values.size();
  j["counts"] = counts;

  j["violations"] = json::array();
  return dump(j);
}

std::string strings_report(const Semigroup& sg, const std::string& digest) {
  json j = preamble("strings", digest);
  StarData star = star_rep(sg);
  MaximalReport mr = maximal_strings(sg);

  json ss = json::array();
  for (Mask s : star.strings) {
    json e;
    e["members"] = mask_names(sg, s);
    e["open"] = is_open_string(sg, s);
    e["maximal"] =
        std::find(mr.maximal.begin(), mr.maximal.end(), s) != mr.maximal.end();
    ss.push_back(e);
  }
  j["strings"] = ss;

  json cls = json::array();
  for (Elem s = 0; s < sg.size(); ++s) {
    if (sg.is_zero(s)) continue;
    ElementClass ec = classify_element(sg, s);
    json e;
    e["element"] = sg.name(s);
    e["prime"] = ec.prime;
    e["irreducible"] = ec.irreducible;
    e["degenerate"] = ec.degenerate;
    cls.push_back(e);
  }
  j["element_classes"] = cls;

  json act = json::array();
  for (Elem s = 0; s < sg.size(); ++s) {
    if (sg.is_zero(s)) continue;
    json e;
    e["element"] = sg.name(s);
    e["pairs"] = pb_pairs(star.rep.maps[s]);
    act.push_back(e);
  }
  j["star_action"] = act;

  json mx;
  mx["forward_invariant"] = mr.forward_invariant;
  if (mr.inverse_failure) {
    json w;
    w["element"] = sg.name(mr.inverse_failure->first);
    w["string"] = mask_names(sg, mr.inverse_failure->second);
    mx["inverse_failure"] = w;
  } else {
    mx["inverse_failure"] = nullptr;
  }
  j["maximal"] = mx;

  j["violations"] = json::array();
  return dump(j);
}

std::string spectrum_report(const Semigroup& sg, const std::string& digest) {
  json j = preamble("spectrum", digest);
  SpectrumData spec = build_spectrum(sg);

  std::size_t ultra = 0, open = 0, ground = 0;
  json cs = json::array();
  for (const auto& phi : spec.chars) {
    CharacterClass cc = classify_character(sg, spec, phi);
    json e;
    e["min"] = mask_names(sg, phi.min);
    e["sigma"] = mask_names(sg, sigma_of_char(sg, phi));
    e["ultra"] = cc.ultra;
    e["open"] = cc.open;
    e["ground"] = cc.ground;
    e["in_e_one"] = cc.in_e_one;
    e["tight"] = cc.tight;
    e["essentially_tight"] = cc.essentially_tight;
    cs.push_back(e);
    ultra += cc.ultra;
    open += cc.open;
    ground += cc.ground;
  }
  j["characters"] = cs;

  json counts;
  counts["characters"] = spec.chars.size();
  counts["ultra"] = ultra;
  counts["open"] = open;
  counts["ground"] = ground;
  j["counts"] = counts;

  json eps = json::array();
  for (std::size_t i = 0; i < spec.hull.sets.size(); ++i) {
    json e;
    e["set"] = mask_names(sg, spec.hull.sets[i].members);
    json strs = json::array();
    for_each_bit(spec.epsilon_sets[i], [&](Elem k) {
      strs.push_back(mask_names(sg, spec.star.strings[k]));
    });
    e["strings"] = strs;
    eps.push_back(e);
  }
  j["epsilon"] = eps;

  SpectraSubsets sub = spectra_subsets(sg, spec);
  json sj;
  sj["ultra_invariant"] = sub.ultra_inv.invariant;
  sj["open_invariant"] = sub.open_inv.invariant;
  sj["tight_invariant"] = sub.tight_inv.invariant;
  sj["max_invariant"] = sub.max_inv.invariant;
  sj["max_within_tight"] = sub.max_within_tight;
  j["subsets"] = sj;

  j["violations"] = json::array();
  return dump(j);
}

std::string germs_report(const Semigroup& sg, const std::string& digest,
                         const std::string& space, bool* violations) {
  json j = preamble("germs", digest);
  j["space"] = space;
  SpectrumData spec = build_spectrum(sg);

  std::vector<std::size_t> y;
  if (space == "ultra") {
    for (std::size_t i = 0; i < spec.chars.size(); ++i)
      if (is_ultra(spec.hull, spec.chars[i])) y.push_back(i);
  } else if (space == "max") {
    MaximalReport mr = maximal_strings(sg);
    for (Mask sigma : mr.maximal) {
      try {
        auto idx = spec.char_index(phi_of_string(sg, spec, sigma));
        if (idx) y.push_back(*idx);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::DegenerateString) throw;
      }
    }
    std::sort(y.begin(), y.end());
    y.erase(std::unique(y.begin(), y.end()), y.end());
  } else {
    for (std::size_t i = 0; i < spec.chars.size(); ++i) y.push_back(i);
  }

  json units = json::array();
  for (std::size_t i : y) units.push_back(mask_names(sg, spec.chars[i].min));
  j["units"] = units;

  json viol = json::array();
  if (violations) *violations = false;
  try {
    GermGroupoid g = germ_groupoid(sg, spec, y);
    json arrows = json::array();
    for (const auto& a : g.arrows) {
      json e;
      e["source"] = a.source;
      e["target"] = a.target;
      e["restriction"] = pb_pairs(a.restriction);
      e["hull_index"] = a.hull_index;
      arrows.push_back(e);
    }
    j["arrows"] = arrows;
    json counts;
    counts["units"] = g.units.size();
    counts["arrows"] = g.arrows.size();
    j["counts"] = counts;
    json laws;
    laws["associative"] = g.associative;
    laws["identities"] = g.identities_ok;
    laws["inverses"] = g.inverses_ok;
    j["laws"] = laws;
    if (!g.associative || !g.identities_ok || !g.inverses_ok) {
      json v;
      v["check"] = "germ-groupoid-laws";
      v["witness"] = "a groupoid law fails on the selected space";
      viol.push_back(v);
    }
  } catch (const Error& e) {
    json v;
    v["check"] = "germ-space-invariance";
    v["witness"] = e.what();
    viol.push_back(v);
  }
  j["violations"] = viol;
  if (violations) *violations = !viol.empty();
  return dump(j);
}

std::string subshift_report(const SubshiftSpec& spec, std::size_t depth,
                            const std::string& digest) {
  json j = preamble("subshift", digest);
  json alp = json::array();
  for (char a : spec.alphabet) alp.push_back(std::string(1, a));
  j["alphabet"] = alp;
  j["mode"] = spec.explicit_mode ? "words" : "forbidden";
  j["depth"] = depth;

  auto language = build_language(spec, depth);
  j["language"] = language;

  Semigroup sg = language_semigroup(spec, depth);
  auto words = semigroup_words(sg);
  json sgj;
  sgj["elements"] = sg.size();
  sgj["zero"] = sg.name(sg.zero());
  j["semigroup"] = sgj;

  WordStringBridge bridge = word_string_bridge(sg);
  json entries = json::array();
  for (const auto& e : bridge.entries) {
    json b;
    b["word"] = words[e.element];
    b["open"] = e.open;
    b["maximal"] = e.maximal;
    b["full_depth"] = e.full_depth;
    entries.push_back(b);
  }
  json bj;
  bj["entries"] = entries;
  bj["bijective"] = bridge.bijective;
  j["bridge"] = bj;

  if (!spec.explicit_mode) {
    GroundUltraReport r = ground_ultra_report(spec, depth);
    json g;
    g["lambda_bound"] = r.lambda_bound;
    g["every_f_lambda_empty_or_infinite"] =
        r.cond_i ? json(*r.cond_i) : json();
    g["every_constructible_empty_or_infinite"] =
        r.cond_ii ? json(*r.cond_ii) : json();
    g["finite_witness_lambda"] = r.finite_witness_lambda;
    g["finite_witness_members"] = r.finite_witness_members;
    g["letters_cover_sets"] = r.cond_iii;
    g["no_ground_ultra"] = r.cond_iv;
    g["ultra_all_full_depth"] = r.cond_v;
    g["uncovered_set"] =
        r.uncovered_set ? mask_names(sg, *r.uncovered_set) : json();
    g["ground_ultra_min"] =
        r.ground_ultra_min ? mask_names(sg, *r.ground_ultra_min) : json();
    g["unmatched_ultra_min"] =
        r.unmatched_ultra_min ? mask_names(sg, *r.unmatched_ultra_min)
                              : json();
    g["truncation_disagreement"] = r.truncation_disagreement;
    j["ground_ultra"] = g;
  }

  HullData hull = build_hull(sg);
  j["normal_forms_unique"] = normal_form_uniqueness(hull).unique;

  j["violations"] = json::array();
  return dump(j);
}

std::string verify_report_json(const VerifyReport& rep,
                               const std::string& digest) {
  json j = preamble("verify", digest);
  j["checks"] = rep.checks;
  j["notes"] = rep.notes;
  json viol = json::array();
  for (const auto& v : rep.violations) {
    json e;
    e["check"] = v.check;
    e["witness"] = v.witness;
    viol.push_back(e);
  }
  j["violations"] = viol;
  j["ok"] = rep.ok();
  return dump(j);
}

std::string semigroup_document(const Semigroup& sg) {
  json j;
  j["elements"] = json::array();
  for (Elem i = 0; i < sg.size(); ++i) j["elements"].push_back(sg.name(i));
  j["zero"] = sg.name(sg.zero());
  json table = json::array();
  for (Elem a = 0; a < sg.size(); ++a) {
    json row = json::array();
    for (Elem b = 0; b < sg.size(); ++b)
      row.push_back(sg.name(sg.product(a, b)));
    table.push_back(row);
  }
  j["table"] = table;
  return dump(j);
}

}  // namespace ihull
