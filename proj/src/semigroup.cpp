#include "ihull/semigroup.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"

namespace ihull {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::MalformedTable: return "MalformedTable";
    case ErrorKind::NonAssociative: return "NonAssociative";
    case ErrorKind::ZeroLawViolation: return "ZeroLawViolation";
    case ErrorKind::NoRightUnit: return "NoRightUnit";
    case ErrorKind::ZeroArgument: return "ZeroArgument";
    case ErrorKind::NoLcm: return "NoLcm";
    case ErrorKind::NoLcms: return "NoLcms";
    case ErrorKind::CarrierMismatch: return "CarrierMismatch";
    case ErrorKind::NotLeftCancellative: return "NotLeftCancellative";
    case ErrorKind::EmptyLambda: return "EmptyLambda";
    case ErrorKind::CarrierTooLarge: return "CarrierTooLarge";
    case ErrorKind::ZeroHit: return "ZeroHit";
    case ErrorKind::EmptyIntersection: return "EmptyIntersection";
    case ErrorKind::BadLambda: return "BadLambda";
    case ErrorKind::NoWitness: return "NoWitness";
    case ErrorKind::DegenerateString: return "DegenerateString";
    case ErrorKind::DomainViolation: return "DomainViolation";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::NotFactorClosed: return "NotFactorClosed";
    case ErrorKind::InadmissibleWord: return "InadmissibleWord";
    case ErrorKind::ExplicitLanguageUnsupported:
      return "ExplicitLanguageUnsupported";
    case ErrorKind::InvalidDocument: return "InvalidDocument";
  }
  return "Unknown";
}

Semigroup::Semigroup(std::vector<std::string> names, Elem zero,
                     std::vector<Elem> table)
    : n_(static_cast<Elem>(names.size())),
      zero_(zero),
      names_(std::move(names)),
      table_(std::move(table)) {
  nonzero_ = (n_ == kMaxElements ? ~Mask{0} : (bit(n_) - 1)) & ~bit(zero_);
  f_.assign(n_, 0);
  e_.assign(n_, 0);
  right_ideal_.assign(n_, 0);
  for (Elem s = 0; s < n_; ++s) {
    for (Elem x = 0; x < n_; ++x) {
      Elem p = product(s, x);
      if (p != zero_) {
        if (x != zero_) f_[s] |= bit(x);
        e_[s] |= bit(p);
      }
    }
    right_ideal_[s] = e_[s];
    if (s != zero_) right_ideal_[s] |= bit(s);
  }
}

void Semigroup::set_names(std::vector<std::string> names) {
  if (names.size() != names_.size())
    fail(ErrorKind::CarrierMismatch, "name list size mismatch");
  names_ = std::move(names);
}

UElem Semigroup::product(UElem a, UElem b) const {
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  return UElem(product(a.elem(), b.elem()));
}

Mask Semigroup::f_set(UElem s) const {
  return s.is_unit() ? nonzero_ : f_[s.elem()];
}

Mask Semigroup::e_set(UElem s) const {
  return s.is_unit() ? nonzero_ : e_[s.elem()];
}

Mask Semigroup::right_ideal(UElem s) const {
  return s.is_unit() ? nonzero_ : right_ideal_[s.elem()];
}

std::optional<Elem> Semigroup::apply_theta(UElem s, Elem x) const {
  if (!has(f_set(s), x)) return std::nullopt;
  if (s.is_unit()) return x;
  return product(s.elem(), x);
}

std::optional<Elem> Semigroup::preimage_theta(UElem s, Elem y) const {
  if (!has(e_set(s), y)) return std::nullopt;
  if (s.is_unit()) return y;
  std::optional<Elem> found;
  for_each_bit(f_set(s), [&](Elem x) {
    if (!found && product(s.elem(), x) == y) found = x;
  });
  return found;
}

namespace {

using nlohmann::json;

[[noreturn]] void doc_fail(const std::string& what) {
  fail(ErrorKind::InvalidDocument, what);
}

}  // namespace

Semigroup load_semigroup(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    doc_fail(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) doc_fail("document must be a JSON object");
  if (!doc.contains("elements") || !doc["elements"].is_array())
    doc_fail("missing \"elements\" array");
  if (!doc.contains("zero") || !doc["zero"].is_string())
    doc_fail("missing \"zero\" name");
  if (!doc.contains("table") || !doc["table"].is_array())
    doc_fail("missing \"table\" array");

  std::vector<std::string> names;
  std::map<std::string, Elem> index;
  for (const auto& e : doc["elements"]) {
    if (!e.is_string()) doc_fail("element names must be strings");
    std::string name = e.get<std::string>();
    if (index.count(name)) doc_fail("duplicate element name: " + name);
    index[name] = static_cast<Elem>(names.size());
    names.push_back(std::move(name));
  }
  Elem n = static_cast<Elem>(names.size());
  if (n == 0) doc_fail("empty element list");
  if (n > kMaxElements)
    fail(ErrorKind::CarrierTooLarge,
         "carrier has " + std::to_string(n) + " elements; limit is " +
             std::to_string(kMaxElements));

  std::string zero_name = doc["zero"].get<std::string>();
  auto zit = index.find(zero_name);
  if (zit == index.end()) doc_fail("zero \"" + zero_name + "\" is not an element");
  Elem zero = zit->second;

  const auto& rows = doc["table"];
  if (rows.size() != n)
    fail(ErrorKind::MalformedTable,
         "table has " + std::to_string(rows.size()) + " rows; expected " +
             std::to_string(n));
  std::vector<Elem> table(static_cast<size_t>(n) * n);
  for (Elem i = 0; i < n; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || row.size() != n)
      fail(ErrorKind::MalformedTable,
           "row " + std::to_string(i) + " is not an array of " +
               std::to_string(n) + " names");
    for (Elem j = 0; j < n; ++j) {
      if (!row[j].is_string())
        fail(ErrorKind::MalformedTable, "table entries must be element names");
      auto it = index.find(row[j].get<std::string>());
      if (it == index.end())
        fail(ErrorKind::MalformedTable,
             "table entry \"" + row[j].get<std::string>() +
                 "\" is not an element");
      table[i * n + j] = it->second;
    }
  }

  auto prod = [&](Elem a, Elem b) { return table[a * n + b]; };
  for (Elem a = 0; a < n; ++a) {
    if (prod(zero, a) != zero || prod(a, zero) != zero)
      fail(ErrorKind::ZeroLawViolation,
           "\"" + names[zero] + "\" does not absorb \"" + names[a] + "\"");
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (prod(prod(a, b), c) != prod(a, prod(b, c)))
          fail(ErrorKind::NonAssociative,
               "(" + names[a] + "·" + names[b] + ")·" + names[c] + " = " +
                   names[prod(prod(a, b), c)] + " but " + names[a] + "·(" +
                   names[b] + "·" + names[c] + ") = " +
                   names[prod(a, prod(b, c))]);

  return Semigroup(std::move(names), zero, std::move(table));
}

PropertyReport classify(const Semigroup& sg) {
  PropertyReport rep;
  Elem n = sg.size();
  Elem z = sg.zero();

  rep.zero_left_cancellative = true;
  for (Elem s = 0; s < n && rep.zero_left_cancellative; ++s)
    for (Elem t = 0; t < n && rep.zero_left_cancellative; ++t)
      for (Elem r = 0; r < n; ++r) {
        Elem st = sg.product(s, t);
        if (st != z && st == sg.product(s, r) && t != r) {
          rep.zero_left_cancellative = false;
          rep.left_witness = TripleWitness{s, t, r};
          break;
        }
      }

  rep.zero_right_cancellative = true;
  for (Elem s = 0; s < n && rep.zero_right_cancellative; ++s)
    for (Elem t = 0; t < n && rep.zero_right_cancellative; ++t)
      for (Elem r = 0; r < n; ++r) {
        Elem ts = sg.product(t, s);
        if (ts != z && ts == sg.product(r, s) && t != r) {
          rep.zero_right_cancellative = false;
          rep.right_witness = TripleWitness{s, t, r};
          break;
        }
      }

  rep.categorical_at_zero = true;
  for (Elem r = 0; r < n && rep.categorical_at_zero; ++r)
    for (Elem s = 0; s < n && rep.categorical_at_zero; ++s)
      for (Elem t = 0; t < n; ++t) {
        Elem rs = sg.product(r, s);
        Elem st = sg.product(s, t);
        if (rs != z && st != z && sg.product(rs, t) == z) {
          rep.categorical_at_zero = false;
          rep.categorical_witness = TripleWitness{r, s, t};
          rep.categorical_pair = {rs, st};
          break;
        }
      }

  rep.right_reductive = true;
  for (Elem s = 0; s < n && rep.right_reductive; ++s)
    for (Elem t = s + 1; t < n; ++t) {
      bool same = true;
      for (Elem x = 0; x < n; ++x)
        if (sg.product(s, x) != sg.product(t, x)) {
          same = false;
          break;
        }
      if (same) {
        rep.right_reductive = false;
        rep.reductive_witness = {s, t};
        break;
      }
    }

  rep.has_right_local_units = true;
  for (Elem s = 0; s < n; ++s) {
    if (!has(sg.e_set(UElem(s)), s) && s != z) {
      // s ∈ sS requires s itself in the range row; zero is trivially 0·0.
      rep.has_right_local_units = false;
      rep.local_unit_witness = s;
      break;
    }
  }

  for (Elem e = 0; e < n; ++e)
    if (e != z && sg.product(e, e) == e) rep.nonzero_idempotents |= bit(e);

  for (Elem u = 0; u < n; ++u) {
    bool is_unit = true;
    for (Elem x = 0; x < n; ++x)
      if (sg.product(u, x) != x || sg.product(x, u) != x) {
        is_unit = false;
        break;
      }
    if (is_unit) {
      rep.unit = u;
      break;
    }
  }

  rep.orthogonal_idempotents = true;
  for_each_bit(rep.nonzero_idempotents, [&](Elem e) {
    for_each_bit(rep.nonzero_idempotents, [&](Elem f) {
      if (e != f && sg.product(e, f) != z) rep.orthogonal_idempotents = false;
    });
  });

  return rep;
}

Elem right_local_unit(const Semigroup& sg, Elem s) {
  for (Elem e = 0; e < sg.size(); ++e)
    if (e != sg.zero() && sg.product(e, e) == e && sg.product(s, e) == s)
      return e;
  fail(ErrorKind::NoRightUnit,
       "no idempotent right unit for \"" + sg.name(s) + "\"");
}

bool divides(const Semigroup& sg, UElem s, UElem t) {
  if (s.is_unit()) return true;
  if (!t.is_unit() && t.elem() == sg.zero()) return true;
  if (t.is_unit()) return false;
  return has(sg.right_ideal(s), t.elem());
}

Mask divisors(const Semigroup& sg, Elem s) {
  if (s == sg.zero())
    fail(ErrorKind::ZeroArgument, "divisor set of the zero element");
  Mask out = 0;
  for_each_bit(sg.nonzero_mask(), [&](Elem d) {
    if (divides(sg, UElem(d), UElem(s))) out |= bit(d);
  });
  return out;
}

std::optional<LcmResult> lcm(const Semigroup& sg, Elem s, Elem t) {
  if (s == sg.zero() || t == sg.zero())
    fail(ErrorKind::ZeroArgument, "lcm of a zero argument");
  // Plain principal ideals: sS ∩ tS = rS as sets, stated on the nonzero
  // parts since zero lies in every ideal.
  Mask meet = sg.e_set(UElem(s)) & sg.e_set(UElem(t));
  LcmResult res;
  for (Elem r = 0; r < sg.size(); ++r) {
    if (sg.e_set(UElem(r)) == meet && divides(sg, UElem(s), UElem(r)) &&
        divides(sg, UElem(t), UElem(r)))
      res.witnesses.push_back(r);
  }
  if (res.witnesses.empty()) return std::nullopt;
  res.canonical = res.witnesses.front();
  return res;
}

bool admits_lcms(const Semigroup& sg, std::optional<LcmFailure>* failure) {
  Mask nz = sg.nonzero_mask();
  bool ok = true;
  for_each_bit(nz, [&](Elem s) {
    if (!ok) return;
    for_each_bit(nz, [&](Elem t) {
      if (!ok) return;
      if (!lcm(sg, s, t)) {
        ok = false;
        if (failure) *failure = LcmFailure{s, t};
      }
    });
  });
  return ok;
}

UElem lcm_unitized(const Semigroup& sg, UElem u, UElem v) {
  if (u.is_unit()) return v;
  if (v.is_unit()) return u;
  if (u.elem() == sg.zero() || v.elem() == sg.zero())
    return UElem(sg.zero());
  auto res = lcm(sg, u.elem(), v.elem());
  if (!res)
    fail(ErrorKind::NoLcm, "no lcm for \"" + sg.name(u.elem()) + "\", \"" +
                               sg.name(v.elem()) + "\"");
  return UElem(res->canonical);
}

}  // namespace ihull
