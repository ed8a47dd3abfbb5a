#include "ihull/spectrum.hpp"

#include <algorithm>
#include <map>

namespace ihull {

std::optional<std::size_t> SpectrumData::char_index(
    const Character& phi) const {
  for (std::size_t i = 0; i < chars.size(); ++i)
    if (chars[i] == phi) return i;
  return std::nullopt;
}

std::vector<Character> enumerate_characters(const HullData& hull) {
  std::vector<Character> out;
  for (const auto& cs : hull.sets)
    if (cs.members != 0) out.push_back(Character{cs.members});
  return out;
}

bool is_ultra(const HullData& hull, const Character& phi) {
  for (const auto& cs : hull.sets)
    if (cs.members != 0 && cs.members != phi.min &&
        (cs.members & ~phi.min) == 0)
      return false;
  return phi.min != 0;
}

namespace {

Mask epsilon_impl(const Semigroup& sg, const HullData& hull,
                  const StarData& star, const ConstructibleSet& x) {
  if (x.witnesses.empty())
    fail(ErrorKind::NoWitness, "constructible set carries no witness");
  const SetWitness& w = x.witnesses.front();
  const LambdaSet& lam = hull.f_witnesses[w.f_index];
  Mask out = 0;
  for (std::size_t i = 0; i < star.strings.size(); ++i)
    if (star_image_membership(sg, w.u, lam, star.strings[i]))
      out |= bit(static_cast<Elem>(i));
  return out;
}

}  // namespace

Mask epsilon(const Semigroup& sg, const SpectrumData& spec,
             const ConstructibleSet& x) {
  return epsilon_impl(sg, spec.hull, spec.star, x);
}

SpectrumData build_spectrum(const Semigroup& sg) {
  SpectrumData spec;
  spec.hull = build_hull(sg);
  spec.star = star_rep(sg);
  spec.chars = enumerate_characters(spec.hull);
  for (const auto& cs : spec.hull.sets)
    spec.epsilon_sets.push_back(epsilon_impl(sg, spec.hull, spec.star, cs));
  return spec;
}

Character phi_of_string(const Semigroup& sg, const SpectrumData& spec,
                        Mask sigma) {
  auto si = spec.star.index_of(sigma);
  if (!si) fail(ErrorKind::DomainViolation, "not a string");
  Mask min = 0;
  bool seen = false;
  for (std::size_t i = 0; i < spec.hull.sets.size(); ++i) {
    if (!has(spec.epsilon_sets[i], static_cast<Elem>(*si))) continue;
    min = seen ? (min & spec.hull.sets[i].members)
               : spec.hull.sets[i].members;
    seen = true;
  }
  if (!seen)
    fail(ErrorKind::DegenerateString,
         "string induces the zero map: " + set_name(sg, sigma));
  return Character{min};
}

Mask sigma_of_char(const Semigroup& sg, const Character& phi) {
  Mask out = 0;
  for_each_bit(sg.nonzero_mask(), [&](Elem s) {
    if (phi.value(sg.e_set(UElem(s)))) out |= bit(s);
  });
  return out;
}

CharacterClass classify_character(const Semigroup& sg,
                                  const SpectrumData& spec,
                                  const Character& phi) {
  CharacterClass c;
  c.ultra = is_ultra(spec.hull, phi);
  Mask sig = sigma_of_char(sg, phi);
  c.ground = sig == 0;
  c.in_e_one = !c.ground;
  c.open = sig != 0 && is_open_string(sg, sig);
  c.tight = c.ultra;
  c.essentially_tight = is_essentially_tight(sg, spec, phi, 2);
  return c;
}

Character dual_apply(const Semigroup& sg, const SpectrumData& spec, UElem u,
                     const Character& phi) {
  if (u.is_unit()) return phi;
  if (!phi.value(sg.f_set(u)))
    fail(ErrorKind::DomainViolation,
         "character does not satisfy the domain idempotent of \"" +
             sg.name(u.elem()) + "\"");
  Mask min = 0;
  bool seen = false;
  for (const auto& cs : spec.hull.sets) {
    Mask pre = 0;  // θ_u⁻¹(E_u ∩ X)
    for_each_bit(sg.f_set(u), [&](Elem x) {
      if (has(cs.members, *sg.apply_theta(u, x))) pre |= bit(x);
    });
    if (phi.value(pre)) {
      min = seen ? (min & cs.members) : cs.members;
      seen = true;
    }
  }
  return Character{min};
}

Character dual_inverse(const Semigroup& sg, const SpectrumData& spec, UElem u,
                       const Character& phi) {
  if (u.is_unit()) return phi;
  if (!phi.value(sg.e_set(u)))
    fail(ErrorKind::DomainViolation,
         "character does not satisfy the range idempotent of \"" +
             sg.name(u.elem()) + "\"");
  Mask min = 0;
  bool seen = false;
  for (const auto& cs : spec.hull.sets) {
    Mask img = 0;  // θ_u(F_u ∩ X)
    for_each_bit(sg.f_set(u) & cs.members, [&](Elem x) {
      img |= bit(*sg.apply_theta(u, x));
    });
    if (phi.value(img)) {
      min = seen ? (min & cs.members) : cs.members;
      seen = true;
    }
  }
  return Character{min};
}

Representation dual_rep(const Semigroup& sg, const SpectrumData& spec) {
  Representation rep;
  if (spec.chars.size() > kMaxElements)
    fail(ErrorKind::CarrierTooLarge, "too many characters for mask carrier");
  Elem m = static_cast<Elem>(spec.chars.size());
  rep.carrier = m == kMaxElements ? ~Mask{0} : (bit(m) - 1);
  for (const auto& phi : spec.chars)
    rep.carrier_labels.push_back(set_name(sg, phi.min));
  for (Elem s = 0; s < sg.size(); ++s) {
    PartialBijection p(m);
    for (Elem i = 0; i < m; ++i)
      if (spec.chars[i].value(sg.f_set(UElem(s)))) {
        auto j = spec.char_index(dual_apply(sg, spec, UElem(s), spec.chars[i]));
        p.set(i, static_cast<Elem>(*j));
      }
    rep.maps.push_back(std::move(p));
  }
  return rep;
}

DualStringLaws dual_string_laws_check(const Semigroup& sg,
                                      const SpectrumData& spec) {
  DualStringLaws laws;
  laws.back_invar = laws.back_on_strings = laws.birth = laws.orbit_ground =
      true;
  auto flag = [&](bool& ok, Elem s, const Character& phi) {
    if (ok && !laws.witness) laws.witness = {s, phi};
    ok = false;
  };
  for (const auto& phi : spec.chars) {
    Mask sig = sigma_of_char(sg, phi);
    for_each_bit(sg.nonzero_mask(), [&](Elem s) {
      if (phi.value(sg.e_set(UElem(s)))) {
        Character psi = dual_inverse(sg, spec, UElem(s), phi);
        Mask back = sigma_of_char(sg, psi);
        Mask expect = 0;
        for_each_bit(sg.nonzero_mask(), [&](Elem p) {
          if (has(sig, sg.product(s, p))) expect |= bit(p);
        });
        if (back != expect) flag(laws.back_invar, s, phi);
        if (!has(sig, s)) flag(laws.back_on_strings, s, phi);
        if (has(interior(sg, sig), s)) {
          if (back != star_inverse(sg, s, sig))
            flag(laws.back_on_strings, s, phi);
        } else if (back != 0) {
          flag(laws.back_on_strings, s, phi);
        }
      }
      if (phi.value(sg.f_set(UElem(s)))) {
        Character psi = dual_apply(sg, spec, UElem(s), phi);
        Mask birth = sigma_of_char(sg, psi);
        if (birth == 0) flag(laws.birth, s, phi);
        Mask expect = sig != 0 ? star_apply(sg, s, sig) : divisors(sg, s);
        if (birth != expect) flag(laws.birth, s, phi);
      }
      if (sig == divisors(sg, s) && !has(sg.e_set(UElem(s)), s)) {
        if (!phi.value(sg.e_set(UElem(s)))) {
          flag(laws.orbit_ground, s, phi);
        } else {
          Character psi = dual_inverse(sg, spec, UElem(s), phi);
          if (sigma_of_char(sg, psi) != 0) flag(laws.orbit_ground, s, phi);
        }
      }
    });
  }
  return laws;
}

std::optional<std::pair<UElem, Character>> nonopen_decomposition(
    const Semigroup& sg, const SpectrumData& spec, const Character& phi,
    std::size_t* match_count) {
  if (match_count) *match_count = 0;
  Mask sig = sigma_of_char(sg, phi);
  if (sig != 0 && is_open_string(sg, sig)) return std::nullopt;

  std::optional<std::pair<UElem, Character>> first;
  std::size_t count = 0;
  std::vector<UElem> us{UElem::unit()};
  for_each_bit(sg.nonzero_mask(), [&](Elem s) { us.push_back(UElem(s)); });
  for (UElem u : us)
    for (const auto& ground : spec.chars) {
      if (sigma_of_char(sg, ground) != 0) continue;
      if (!ground.value(sg.f_set(u))) continue;
      if (dual_apply(sg, spec, u, ground) == phi) {
        ++count;
        if (!first) first = {u, ground};
      }
    }
  if (match_count) *match_count = count;
  return first;
}

UltraClassification ultra_classification(const Semigroup& sg,
                                         const SpectrumData& spec) {
  UltraClassification out;
  std::vector<std::optional<Character>> phi_of(spec.star.strings.size());
  for (std::size_t i = 0; i < spec.star.strings.size(); ++i) {
    try {
      phi_of[i] = phi_of_string(sg, spec, spec.star.strings[i]);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::DegenerateString) throw;
    }
  }
  for (std::size_t i = 0; i < spec.star.strings.size(); ++i)
    if (phi_of[i] && is_ultra(spec.hull, *phi_of[i]))
      out.quasi_maximal.push_back(spec.star.strings[i]);

  for (std::size_t ci = 0; ci < spec.chars.size(); ++ci) {
    const Character& phi = spec.chars[ci];
    if (!is_ultra(spec.hull, phi)) continue;
    out.ultra.push_back(ci);
    Mask sig = sigma_of_char(sg, phi);
    if (sig != 0 && is_open_string(sg, sig)) {
      out.open_ultra.push_back(ci);
      std::optional<Mask> match;
      for (std::size_t i = 0; i < spec.star.strings.size() && !match; ++i)
        if (phi_of[i] && *phi_of[i] == phi &&
            is_open_string(sg, spec.star.strings[i]))
          match = spec.star.strings[i];
      out.open_ultra_string.push_back(match);
    } else {
      std::size_t count = 0;
      auto dec = nonopen_decomposition(sg, spec, phi, &count);
      out.nonopen_ultra_decomp.push_back(dec);
    }
  }

  out.open_ultra_all_matched =
      std::all_of(out.open_ultra_string.begin(), out.open_ultra_string.end(),
                  [](const auto& m) { return m.has_value(); });
  out.nonopen_ultra_all_ground_decomposed = std::all_of(
      out.nonopen_ultra_decomp.begin(), out.nonopen_ultra_decomp.end(),
      [&](const auto& d) {
        return d.has_value() && is_ultra(spec.hull, d->second);
      });

  out.open_maximal_all_ultra = true;
  for (Mask sigma : maximal_strings(sg).maximal) {
    if (!is_open_string(sg, sigma)) continue;
    auto i = spec.star.index_of(sigma);
    if (!phi_of[*i] || !is_ultra(spec.hull, *phi_of[*i]))
      out.open_maximal_all_ultra = false;
  }

  out.relatively_maximal_all_ultra = true;
  for (std::size_t fi = 0; fi < spec.hull.f_values.size(); ++fi) {
    Mask f = spec.hull.f_values[fi];
    if (spec.hull.f_witnesses[fi].elems == 0) continue;
    for (std::size_t i = 0; i < spec.star.strings.size(); ++i) {
      Mask sigma = spec.star.strings[i];
      if (sigma & ~f) continue;
      if (!is_open_string(sg, sigma)) continue;
      bool rel_max = true;
      for (Mask tau : spec.star.strings)
        if (tau != sigma && (sigma & ~tau) == 0 && (tau & ~f) == 0)
          rel_max = false;
      if (rel_max && (!phi_of[i] || !is_ultra(spec.hull, *phi_of[i])))
        out.relatively_maximal_all_ultra = false;
    }
  }
  return out;
}

PartialBijection rho_on_strings(const Semigroup& sg, const SpectrumData& spec,
                                const HullElement& h) {
  std::optional<LcmFailure> bad;
  if (!admits_lcms(sg, &bad))
    fail(ErrorKind::NoLcms, "semigroup does not admit lcms: (" +
                                sg.name(bad->s) + ", " + sg.name(bad->t) + ")");
  if (h.witnesses.empty())
    fail(ErrorKind::NoWitness, "hull element carries no witness");
  const HullWitness& w = h.witnesses.front();
  Elem m = static_cast<Elem>(spec.star.strings.size());
  Mask fstar = 0;
  for (Elem i = 0; i < m; ++i)
    if ((spec.star.strings[i] & ~spec.hull.f_values[w.f_index]) == 0)
      fstar |= bit(i);
  PartialBijection mid = PartialBijection::identity_on(m, fstar);
  return compose(theta_of(spec.star.rep, w.u),
                 compose(mid, theta_of(spec.star.rep, w.v).inverse()));
}

namespace {

InvarianceReport check_invariance(const Semigroup& sg,
                                  const SpectrumData& spec,
                                  const std::vector<std::size_t>& subset) {
  InvarianceReport rep;
  auto in_subset = [&](const Character& phi) {
    for (std::size_t i : subset)
      if (spec.chars[i] == phi) return true;
    return false;
  };
  for (std::size_t i : subset) {
    const Character& phi = spec.chars[i];
    for_each_bit(sg.nonzero_mask(), [&](Elem s) {
      if (!rep.invariant) return;
      if (phi.value(sg.f_set(UElem(s))) &&
          !in_subset(dual_apply(sg, spec, UElem(s), phi))) {
        rep.invariant = false;
        rep.witness = {s, i, false};
      }
      if (rep.invariant && phi.value(sg.e_set(UElem(s))) &&
          !in_subset(dual_inverse(sg, spec, UElem(s), phi))) {
        rep.invariant = false;
        rep.witness = {s, i, true};
      }
    });
    if (!rep.invariant) break;
  }
  return rep;
}

}  // namespace

SpectraSubsets spectra_subsets(const Semigroup& sg, const SpectrumData& spec) {
  SpectraSubsets out;
  for (std::size_t i = 0; i < spec.chars.size(); ++i) {
    const Character& phi = spec.chars[i];
    if (is_ultra(spec.hull, phi)) out.ultra.push_back(i);
    Mask sig = sigma_of_char(sg, phi);
    if (sig != 0 && is_open_string(sg, sig)) out.open.push_back(i);
  }
  out.tight = out.ultra;
  for (Mask sigma : maximal_strings(sg).maximal) {
    try {
      Character phi = phi_of_string(sg, spec, sigma);
      out.max.push_back(*spec.char_index(phi));
    } catch (const Error& e) {
      // A degenerate maximal string induces no character; skipped.
      if (e.kind() != ErrorKind::DegenerateString) throw;
    }
  }
  std::sort(out.max.begin(), out.max.end());
  out.max.erase(std::unique(out.max.begin(), out.max.end()), out.max.end());

  out.ultra_inv = check_invariance(sg, spec, out.ultra);
  out.max_inv = check_invariance(sg, spec, out.max);
  out.tight_inv = out.ultra_inv;
  out.open_inv = check_invariance(sg, spec, out.open);
  out.max_within_tight =
      std::includes(out.tight.begin(), out.tight.end(), out.max.begin(),
                    out.max.end());
  return out;
}

bool is_essentially_tight(const Semigroup& sg, const SpectrumData& spec,
                          const Character& phi, std::size_t family_bound,
                          TightnessWitness* witness) {
  (void)sg;
  std::size_t k = spec.hull.sets.size();
  for (std::size_t n = 1; n <= family_bound; ++n) {
    std::vector<std::size_t> idx(n, 0);
    while (true) {
      for (const auto& cs : spec.hull.sets) {
        // Symmetric difference with the union is finite on this carrier.
        bool join = false;
        for (std::size_t i : idx)
          join = join || phi.value(spec.hull.sets[i].members);
        if (phi.value(cs.members) != join) {
          if (witness) {
            witness->x = cs.members;
            witness->family.clear();
            for (std::size_t i : idx)
              witness->family.push_back(spec.hull.sets[i].members);
          }
          return false;
        }
      }
      std::size_t pos = 0;
      while (pos < n && ++idx[pos] == k) idx[pos++] = 0;
      if (pos == n) break;
    }
  }
  return true;
}

GermGroupoid germ_groupoid(const Semigroup& sg, const SpectrumData& spec,
                           const std::vector<std::size_t>& y) {
  GermGroupoid g;
  for (std::size_t i : y) g.units.push_back(spec.chars[i]);

  auto unit_index = [&](Mask min) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < g.units.size(); ++i)
      if (g.units[i].min == min) return i;
    return std::nullopt;
  };

  for (std::size_t ui = 0; ui < g.units.size(); ++ui) {
    Mask min = g.units[ui].min;
    for (std::size_t hi = 0; hi < spec.hull.elements.size(); ++hi) {
      const PartialBijection& h = spec.hull.elements[hi].map;
      if (min & ~h.domain()) continue;
      auto target = unit_index(h.image(min));
      if (!target)
        fail(ErrorKind::NotInvariant,
             "character set is not closed under the hull action at " +
                 set_name(sg, min));
      PartialBijection restr(sg.size());
      for_each_bit(min, [&](Elem x) { restr.set(x, h.at(x)); });
      bool known = false;
      for (const auto& a : g.arrows)
        if (a.source == ui && a.restriction == restr) known = true;
      if (!known) g.arrows.push_back({ui, *target, restr, hi});
    }
  }

  auto arrow_index = [&](std::size_t source,
                         const PartialBijection& restr) -> std::int64_t {
    for (std::size_t i = 0; i < g.arrows.size(); ++i)
      if (g.arrows[i].source == source && g.arrows[i].restriction == restr)
        return static_cast<std::int64_t>(i);
    return -1;
  };

  std::size_t a = g.arrows.size();
  g.composition.assign(a, std::vector<std::int64_t>(a, -1));
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < a; ++j) {
      if (g.arrows[j].target != g.arrows[i].source) continue;
      g.composition[i][j] = arrow_index(
          g.arrows[j].source,
          compose(g.arrows[i].restriction, g.arrows[j].restriction));
    }

  for (std::size_t ui = 0; ui < g.units.size(); ++ui) {
    auto e = arrow_index(
        ui, PartialBijection::identity_on(sg.size(), g.units[ui].min));
    if (e < 0)
      fail(ErrorKind::NotInvariant,
           "no identity germ at " + set_name(sg, g.units[ui].min));
    g.identity_arrows.push_back(static_cast<std::size_t>(e));
  }

  g.associative = true;
  for (std::size_t i = 0; i < a && g.associative; ++i)
    for (std::size_t j = 0; j < a && g.associative; ++j) {
      if (g.composition[i][j] < 0) continue;
      for (std::size_t k = 0; k < a; ++k) {
        if (g.composition[j][k] < 0) continue;
        auto lhs = g.composition[static_cast<std::size_t>(g.composition[i][j])]
                                [k];
        auto rhs = g.composition[i][static_cast<std::size_t>(
            g.composition[j][k])];
        if (lhs != rhs || lhs < 0) {
          g.associative = false;
          break;
        }
      }
    }

  g.identities_ok = true;
  for (std::size_t i = 0; i < a; ++i) {
    auto es = g.identity_arrows[g.arrows[i].source];
    auto et = g.identity_arrows[g.arrows[i].target];
    if (g.composition[i][es] != static_cast<std::int64_t>(i) ||
        g.composition[et][i] != static_cast<std::int64_t>(i))
      g.identities_ok = false;
  }

  g.inverses_ok = true;
  for (std::size_t i = 0; i < a; ++i) {
    auto inv = arrow_index(g.arrows[i].target,
                           g.arrows[i].restriction.inverse());
    if (inv < 0) {
      g.inverses_ok = false;
      continue;
    }
    std::size_t j = static_cast<std::size_t>(inv);
    if (g.composition[j][i] !=
            static_cast<std::int64_t>(g.identity_arrows[g.arrows[i].source]) ||
        g.composition[i][j] !=
            static_cast<std::int64_t>(g.identity_arrows[g.arrows[i].target]))
      g.inverses_ok = false;
  }
  return g;
}

}  // namespace ihull
