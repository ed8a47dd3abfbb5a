#include "ihull/hull.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace ihull {

std::optional<std::size_t> HullData::set_index(Mask members) const {
  for (std::size_t i = 0; i < sets.size(); ++i)
    if (sets[i].members == members) return i;
  return std::nullopt;
}

std::optional<std::size_t> HullData::element_index(
    const PartialBijection& map) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i].map == map) return i;
  return std::nullopt;
}

std::optional<std::size_t> HullData::f_index(Mask f) const {
  for (std::size_t i = 0; i < f_values.size(); ++i)
    if (f_values[i] == f) return i;
  return std::nullopt;
}

std::vector<PartialBijection> hull_closure(const Semigroup& sg) {
  Representation rep = regular_representation(sg);
  std::vector<PartialBijection> gens;
  for (Elem s = 0; s < sg.size(); ++s) {
    gens.push_back(rep.maps[s]);
    gens.push_back(rep.maps[s].inverse());
  }

  std::set<PartialBijection> seen(gens.begin(), gens.end());
  std::vector<PartialBijection> queue(seen.begin(), seen.end());
  while (!queue.empty()) {
    PartialBijection h = std::move(queue.back());
    queue.pop_back();
    for (const auto& g : gens) {
      PartialBijection hg = compose(h, g);
      if (seen.insert(hg).second) queue.push_back(hg);
    }
  }
  return {seen.begin(), seen.end()};
}

namespace {

// Λ ↦ F_Λ values: close {F_s : s ∈ S} under pairwise intersection.
std::vector<Mask> meet_closure(const Semigroup& sg) {
  std::set<Mask> vals;
  for (Elem s = 0; s < sg.size(); ++s) vals.insert(sg.f_set(UElem(s)));
  std::vector<Mask> queue(vals.begin(), vals.end());
  while (!queue.empty()) {
    Mask f = queue.back();
    queue.pop_back();
    for (Mask g : std::vector<Mask>(vals.begin(), vals.end())) {
      Mask m = f & g;
      if (vals.insert(m).second) queue.push_back(m);
    }
  }
  return {vals.begin(), vals.end()};
}

LambdaSet maximal_lambda(const Semigroup& sg, Mask f) {
  LambdaSet lam;
  lam.unit = true;
  for (Elem s = 0; s < sg.size(); ++s)
    if ((f & ~sg.f_set(UElem(s))) == 0) lam.elems |= bit(s);
  return lam;
}

std::vector<UElem> lambda_members(const LambdaSet& lam) {
  std::vector<UElem> out;
  if (lam.unit) out.push_back(UElem::unit());
  for_each_bit(lam.elems, [&](Elem s) { out.push_back(UElem(s)); });
  return out;
}

}  // namespace

HullData build_hull(const Semigroup& sg) {
  Representation rep = regular_representation(sg);
  HullData data;
  data.f_values = meet_closure(sg);
  for (Mask f : data.f_values)
    data.f_witnesses.push_back(maximal_lambda(sg, f));

  std::map<PartialBijection, std::vector<HullWitness>> elems;
  std::map<Mask, std::vector<SetWitness>> sets;
  for (std::uint32_t fi = 0; fi < data.f_values.size(); ++fi) {
    Mask f = data.f_values[fi];
    if (f == 0) {
      elems[PartialBijection::empty(sg.size())].push_back(
          {UElem::unit(), fi, UElem::unit()});
      sets[0].push_back({UElem::unit(), fi});
      continue;
    }
    auto members = lambda_members(data.f_witnesses[fi]);
    PartialBijection idf = PartialBijection::identity_on(sg.size(), f);
    for (UElem u : members) {
      PartialBijection left = compose(theta_of(rep, u), idf);
      sets[left.range()].push_back({u, fi});
      for (UElem v : members)
        elems[compose(left, theta_of(rep, v).inverse())].push_back({u, fi, v});
    }
  }

  for (auto& [map, wits] : elems)
    data.elements.push_back({map, std::move(wits)});
  for (auto& [members, wits] : sets)
    data.sets.push_back({members, std::move(wits)});
  return data;
}

std::vector<char> e_one_ideal(const Semigroup& sg, const HullData& hull) {
  std::vector<char> flags(hull.sets.size(), 0);
  for (std::size_t i = 0; i < hull.sets.size(); ++i)
    for (Elem s = 0; s < sg.size() && !flags[i]; ++s)
      if ((hull.sets[i].members & ~sg.e_set(UElem(s))) == 0) flags[i] = 1;
  return flags;
}

std::string set_name(const Semigroup& sg, Mask members) {
  std::string out = "{";
  bool first = true;
  for_each_bit(members, [&](Elem x) {
    if (!first) out += ",";
    out += sg.name(x);
    first = false;
  });
  return out + "}";
}

std::string hasse_export(const Semigroup& sg, const HullData& hull) {
  std::ostringstream os;
  os << "digraph semilattice {\n  rankdir=BT;\n";
  for (const auto& cs : hull.sets)
    os << "  \"" << set_name(sg, cs.members) << "\";\n";
  for (const auto& lo : hull.sets)
    for (const auto& hi : hull.sets) {
      if (lo.members == hi.members || (lo.members & ~hi.members)) continue;
      bool cover = true;
      for (const auto& mid : hull.sets)
        if (mid.members != lo.members && mid.members != hi.members &&
            !(lo.members & ~mid.members) && !(mid.members & ~hi.members))
          cover = false;
      if (cover)
        os << "  \"" << set_name(sg, lo.members) << "\" -> \""
           << set_name(sg, hi.members) << "\";\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace ihull
