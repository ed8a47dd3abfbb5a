#include "ihull/strings.hpp"

#include <algorithm>
#include <set>

namespace ihull {

bool is_string(const Semigroup& sg, Mask sigma, StringCheck* check) {
  StringCheck local;
  StringCheck& c = check ? *check : local;
  c = StringCheck{};
  if (sigma == 0 || has(sigma, sg.zero())) {
    c.violated_clause = 1;
    return false;
  }
  bool bad = false;
  for_each_bit(sigma, [&](Elem t) {
    if (bad) return;
    for_each_bit(sg.nonzero_mask() & ~sigma, [&](Elem s) {
      if (!bad && divides(sg, UElem(s), UElem(t))) {
        c.violated_clause = 2;
        c.witness_a = s;
        c.witness_b = t;
        bad = true;
      }
    });
  });
  if (bad) return false;
  for_each_bit(sigma, [&](Elem s1) {
    if (bad) return;
    for_each_bit(sigma, [&](Elem s2) {
      if (bad) return;
      bool bounded = false;
      for_each_bit(sigma, [&](Elem s) {
        if (divides(sg, UElem(s1), UElem(s)) &&
            divides(sg, UElem(s2), UElem(s)))
          bounded = true;
      });
      if (!bounded) {
        c.violated_clause = 3;
        c.witness_a = s1;
        c.witness_b = s2;
        bad = true;
      }
    });
  });
  if (bad) return false;
  c.ok = true;
  return true;
}

std::vector<Mask> all_strings(const Semigroup& sg) {
  std::set<Mask> out;
  for_each_bit(sg.nonzero_mask(), [&](Elem s) { out.insert(divisors(sg, s)); });
  return {out.begin(), out.end()};
}

ElementClass classify_element(const Semigroup& sg, Elem s) {
  if (s == sg.zero())
    fail(ErrorKind::ZeroArgument, "classifying the zero element");
  ElementClass c;
  c.prime = divisors(sg, s) == bit(s);
  c.irreducible = true;
  for (Elem x = 0; x < sg.size() && c.irreducible; ++x)
    for (Elem y = 0; y < sg.size(); ++y)
      if (sg.product(x, y) == s) {
        c.irreducible = false;
        break;
      }
  bool killed_left = true;
  for (Elem x = 0; x < sg.size(); ++x)
    if (sg.product(x, s) != sg.zero()) killed_left = false;
  c.degenerate = c.irreducible && killed_left;
  return c;
}

Mask star_apply(const Semigroup& sg, Elem r, Mask sigma) {
  Mask out = 0;
  bool hit = false;
  for_each_bit(sigma, [&](Elem s) {
    Elem rs = sg.product(r, s);
    if (rs == sg.zero()) {
      hit = true;
      return;
    }
    out |= divisors(sg, rs);
  });
  if (hit || sigma == 0)
    fail(ErrorKind::ZeroHit, "string leaves the domain of the action of \"" +
                                 sg.name(r) + "\"");
  return out;
}

Mask star_inverse(const Semigroup& sg, Elem r, Mask sigma) {
  if ((sigma & sg.e_set(UElem(r))) == 0)
    fail(ErrorKind::EmptyIntersection,
         "string misses the range of the action of \"" + sg.name(r) + "\"");
  Mask out = 0;
  for_each_bit(sg.nonzero_mask(), [&](Elem t) {
    if (has(sigma, sg.product(r, t))) out |= bit(t);
  });
  return out;
}

std::optional<std::size_t> StarData::index_of(Mask sigma) const {
  for (std::size_t i = 0; i < strings.size(); ++i)
    if (strings[i] == sigma) return i;
  return std::nullopt;
}

StarData star_rep(const Semigroup& sg) {
  StarData data;
  data.strings = all_strings(sg);
  Elem m = static_cast<Elem>(data.strings.size());

  data.rep.carrier = m == kMaxElements ? ~Mask{0} : (bit(m) - 1);
  for (Mask sigma : data.strings)
    data.rep.carrier_labels.push_back(set_name(sg, sigma));

  data.fstar.assign(sg.size(), 0);
  data.estar.assign(sg.size(), 0);
  for (Elem r = 0; r < sg.size(); ++r) {
    PartialBijection p(m);
    for (Elem i = 0; i < m; ++i) {
      Mask sigma = data.strings[i];
      if (sigma & ~sg.f_set(UElem(r))) continue;
      data.fstar[r] |= bit(i);
      auto j = data.index_of(star_apply(sg, r, sigma));
      p.set(i, static_cast<Elem>(*j));
    }
    for (Elem i = 0; i < m; ++i)
      if (data.strings[i] & sg.e_set(UElem(r))) data.estar[r] |= bit(i);
    data.rep.maps.push_back(std::move(p));
  }
  return data;
}

bool star_image_membership(const Semigroup& sg, UElem u,
                           const LambdaSet& lambda, Mask sigma) {
  if (lambda.empty()) fail(ErrorKind::EmptyLambda, "Λ must be nonempty");
  if (!lambda.unit && lambda.elems == 0)
    fail(ErrorKind::BadLambda, "Λ must meet S");
  bool u_ok = u.is_unit() ? lambda.unit : has(lambda.elems, u.elem());
  if (!u_ok) fail(ErrorKind::BadLambda, "u must lie in Λ");
  Mask f = sg.nonzero_mask();
  for_each_bit(lambda.elems, [&](Elem t) { f &= sg.f_set(UElem(t)); });
  Mask image = 0;  // θ_u(F_Λ)
  for_each_bit(f, [&](Elem x) {
    if (auto y = sg.apply_theta(u, x)) image |= bit(*y);
  });
  Mask meet = sigma & sg.e_set(u);
  return meet != 0 && (meet & ~image) == 0;
}

Mask interior(const Semigroup& sg, Mask sigma) {
  Mask out = 0;
  for_each_bit(sg.nonzero_mask(), [&](Elem s) {
    for_each_bit(sg.nonzero_mask(), [&](Elem x) {
      if (has(sigma, sg.product(s, x))) out |= bit(s);
    });
  });
  return out;
}

bool is_open_string(const Semigroup& sg, Mask sigma) {
  return interior(sg, sigma) == sigma;
}

MaximalReport maximal_strings(const Semigroup& sg) {
  MaximalReport rep;
  auto strings = all_strings(sg);
  for (Mask sigma : strings) {
    bool maximal = true;
    for (Mask tau : strings)
      if (tau != sigma && (sigma & ~tau) == 0) maximal = false;
    if (maximal) rep.maximal.push_back(sigma);
  }

  auto is_maximal = [&](Mask sigma) {
    return std::find(rep.maximal.begin(), rep.maximal.end(), sigma) !=
           rep.maximal.end();
  };
  rep.forward_invariant = true;
  for (Mask sigma : rep.maximal) {
    for_each_bit(sg.nonzero_mask(), [&](Elem r) {
      if ((sigma & ~sg.f_set(UElem(r))) == 0) {
        if (!is_maximal(star_apply(sg, r, sigma)) && rep.forward_invariant) {
          rep.forward_invariant = false;
          rep.forward_witness = {r, sigma};
        }
      }
      if ((sigma & sg.e_set(UElem(r))) != 0 && !rep.inverse_failure) {
        if (!is_maximal(star_inverse(sg, r, sigma)))
          rep.inverse_failure = {r, sigma};
      }
    });
  }
  return rep;
}

bool delta_covariance_check(const Semigroup& sg,
                            std::optional<std::pair<Elem, Elem>>* witness) {
  std::optional<std::pair<Elem, Elem>> found;
  for_each_bit(sg.nonzero_mask(), [&](Elem s) {
    for_each_bit(sg.nonzero_mask(), [&](Elem x) {
      if (found) return;
      Mask dx = divisors(sg, x);
      bool in_f = has(sg.f_set(UElem(s)), x);
      bool star_in_f = (dx & ~sg.f_set(UElem(s))) == 0;
      bool bad = in_f != star_in_f;
      if (!bad && in_f)
        bad = star_apply(sg, s, dx) != divisors(sg, sg.product(s, x));
      if (bad) found = {s, x};
    });
  });
  if (witness) *witness = found;
  return !found;
}

}  // namespace ihull
