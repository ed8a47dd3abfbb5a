#include "ihull/representation.hpp"

namespace ihull {

Representation regular_representation(const Semigroup& sg) {
  Elem n = sg.size();
  for (Elem s = 0; s < n; ++s)
    for (Elem x = 0; x < n; ++x)
      for (Elem y = x + 1; y < n; ++y) {
        Elem sx = sg.product(s, x);
        if (sx != sg.zero() && sx == sg.product(s, y))
          fail(ErrorKind::NotLeftCancellative,
               "\"" + sg.name(s) + "\"·\"" + sg.name(x) + "\" = \"" +
                   sg.name(s) + "\"·\"" + sg.name(y) + "\" = \"" +
                   sg.name(sx) + "\" ≠ zero");
      }

  Representation rep;
  rep.carrier_labels = sg.names();
  rep.carrier = sg.nonzero_mask();
  rep.maps.reserve(n);
  for (Elem s = 0; s < n; ++s) {
    PartialBijection p(n);
    for_each_bit(sg.f_set(UElem(s)), [&](Elem x) {
      p.set(x, sg.product(s, x));
    });
    rep.maps.push_back(std::move(p));
  }
  return rep;
}

RepReport check_representation(const Semigroup& sg, const Representation& rep) {
  RepReport out;
  Elem n = sg.size();
  if (rep.maps.size() != n)
    fail(ErrorKind::CarrierMismatch, "one map per element required");

  out.is_representation = true;
  if (rep.maps[sg.zero()].domain() != 0) {
    out.is_representation = false;
    out.multiplicativity_witness = {sg.zero(), sg.zero()};
  }
  for (Elem s = 0; s < n && out.is_representation; ++s) {
    if ((rep.maps[s].domain() | rep.maps[s].range()) & ~rep.carrier) {
      out.is_representation = false;
      out.multiplicativity_witness = {s, s};
      break;
    }
    for (Elem t = 0; t < n; ++t)
      if (compose(rep.maps[s], rep.maps[t]) != rep.maps[sg.product(s, t)]) {
        out.is_representation = false;
        out.multiplicativity_witness = {s, t};
        break;
      }
  }

  Mask covered = 0;
  for (Elem s = 0; s < n; ++s) covered |= rep.maps[s].range();
  out.essential = covered == rep.carrier;

  auto range_idem = [&](Elem x) {
    return compose(rep.maps[x], rep.maps[x].inverse());
  };
  auto domain_idem = [&](Elem x) {
    return compose(rep.maps[x].inverse(), rep.maps[x]);
  };

  out.covariance_range = true;
  for (Elem s = 0; s < n && out.covariance_range; ++s)
    for (Elem t = 0; t < n; ++t) {
      auto lhs = compose(rep.maps[s], range_idem(t));
      auto rhs = compose(range_idem(sg.product(s, t)), rep.maps[s]);
      if (lhs != rhs) {
        out.covariance_range = false;
        out.covariance_range_witness = {s, t};
        break;
      }
    }

  out.covariance_domain = true;
  for (Elem s = 0; s < n && out.covariance_domain; ++s)
    for (Elem t = 0; t < n; ++t) {
      auto lhs = compose(domain_idem(t), rep.maps[s]);
      auto rhs = compose(rep.maps[s], domain_idem(sg.product(t, s)));
      if (lhs != rhs) {
        out.covariance_domain = false;
        out.covariance_domain_witness = {s, t};
        break;
      }
    }

  return out;
}

bool respects_lcms(const Semigroup& sg, const Representation& rep,
                   std::optional<LcmRangeViolation>* violation) {
  Mask nz = sg.nonzero_mask();
  bool ok = true;
  for_each_bit(nz, [&](Elem s) {
    if (!ok) return;
    for_each_bit(nz, [&](Elem t) {
      if (!ok) return;
      auto res = lcm(sg, s, t);
      if (!res) return;
      Mask expect = rep.maps[s].range() & rep.maps[t].range();
      for (Elem r : res->witnesses)
        if (rep.maps[r].range() != expect) {
          ok = false;
          if (violation) *violation = LcmRangeViolation{s, t, r};
          return;
        }
    });
  });
  return ok;
}

Mask f_lambda_mask(const Representation& rep, const LambdaSet& lambda) {
  if (lambda.empty()) fail(ErrorKind::EmptyLambda, "Λ must be nonempty");
  Mask m = rep.carrier;
  for_each_bit(lambda.elems, [&](Elem t) { m &= rep.maps[t].domain(); });
  return m;
}

PartialBijection f_lambda(const Representation& rep, const LambdaSet& lambda) {
  return PartialBijection::identity_on(rep.carrier_size(),
                                       f_lambda_mask(rep, lambda));
}

PartialBijection theta_of(const Representation& rep, UElem u) {
  if (u.is_unit())
    return PartialBijection::identity_on(rep.carrier_size(), rep.carrier);
  return rep.maps[u.elem()];
}

}  // namespace ihull
