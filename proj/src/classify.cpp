#include "richss/classify.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "richss/weyl.hpp"

namespace richss {

namespace {

using Tuple = std::vector<int>;

[[noreturn]] void bug(const std::string& what) {
  throw std::logic_error("classify: " + what);
}

void check(bool ok, const std::string& what) {
  if (!ok) bug(what);
}

// lo, lo+step, ..., up to and including hi when it is hit exactly
std::vector<int> by_step(int lo, int hi, int step) {
  std::vector<int> out;
  for (int k = lo; k <= hi; k += step) out.push_back(k);
  return out;
}

std::vector<int> asc(const std::set<int>& s) {
  return std::vector<int>(s.begin(), s.end());
}

std::vector<int> negated(std::vector<int> xs) {
  for (int& x : xs) x = -x;
  std::sort(xs.begin(), xs.end());
  return xs;
}

// (-i_p, ..., -i_1); ascending because the tuple is increasing
std::vector<int> seg_neg(const Tuple& i) { return negated(i); }

Tuple primed(const Tuple& i) {
  Tuple out;
  out.reserve(i.size());
  for (int k : i) out.push_back(k - 1);
  return out;
}

std::set<int> pool_minus(int lo, int hi, const Tuple& a, const Tuple& b) {
  std::set<int> s;
  for (int k = lo; k <= hi; ++k) s.insert(k);
  for (int k : a) s.erase(k);
  for (int k : b) s.erase(k);
  return s;
}

SignedPerm join(std::initializer_list<std::vector<int>> parts) {
  SignedPerm out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

struct Triple {
  ExtremalLabel label;
  SignedPerm v, w;
};

// ---- windows, type B/C ----

SignedPerm bc_v_r1(int n) {
  if (n % 2 == 0)
    return join({negated(by_step(1, n - 1, 2)), by_step(2, n, 2)});
  return join({negated(by_step(2, n - 1, 2)), by_step(1, n, 2)});
}

SignedPerm bc_w_r1(int n) {
  if (n % 2 == 0)
    return join({negated(by_step(2, n, 2)), by_step(1, n - 1, 2)});
  return join({negated(by_step(1, n, 2)), by_step(2, n - 1, 2)});
}

std::vector<Triple> bc_interior(int n, int r) {
  const int d = n + 1 - r;
  std::vector<Triple> out;
  if (d % 2 == 0) {
    for (const Tuple& i : enumerate_index_tuples(d / 2, 2, n)) {
      Tuple ip = primed(i);
      auto rest = asc(pool_minus(1, n, i, ip));
      out.push_back({{Family::Plain, i},
                     join({rest, seg_neg(ip), i}),
                     join({rest, seg_neg(i), ip})});
    }
  } else {
    for (const Tuple& i : enumerate_index_tuples(d / 2, 3, n)) {
      Tuple ip = primed(i);
      auto rest = asc(pool_minus(2, n, i, ip));
      out.push_back({{Family::Plain, i},
                     join({rest, seg_neg(ip), {1}, i}),
                     join({rest, seg_neg(i), {-1}, ip})});
    }
  }
  return out;
}

// ---- windows, type D ----

SignedPerm d_v_r1(int n) {
  switch (n % 4) {
    case 0:
      return join({negated(by_step(1, n - 1, 2)), by_step(2, n, 2)});
    case 2:
      return join({negated(by_step(3, n - 1, 2)), {1}, by_step(2, n, 2)});
    case 1: {
      auto negs = by_step(4, n - 1, 2);
      negs.push_back(1);
      return join({negated(negs), {2}, by_step(3, n, 2)});
    }
    default:
      return join({negated(by_step(4, n - 1, 2)), {1, 2}, by_step(3, n, 2)});
  }
}

SignedPerm d_w_r1(int n) {
  switch (n % 4) {
    case 0:
      return join({negated(by_step(2, n, 2)), by_step(1, n - 1, 2)});
    case 2: {
      auto negs = by_step(2, n, 2);
      negs.push_back(1);
      return join({negated(negs), by_step(3, n - 1, 2)});
    }
    case 1: {
      auto negs = by_step(3, n, 2);
      negs.push_back(1);
      negs.push_back(2);
      return join({negated(negs), by_step(4, n - 1, 2)});
    }
    default: {
      auto negs = by_step(3, n, 2);
      negs.push_back(2);
      return join({negated(negs), {1}, by_step(4, n - 1, 2)});
    }
  }
}

// The r = 2 windows are the r = 1 windows with the (n-1)-entry (for v) or
// the n-entry (for w) made positive and moved to the front, and the sign of
// the 1-entry flipped to keep the negative count even.
SignedPerm d_r2_from_r1(const SignedPerm& base, int moved) {
  std::vector<int> rest;
  for (int x : base) {
    if (std::abs(x) == moved) continue;
    rest.push_back(std::abs(x) == 1 ? -x : x);
  }
  std::sort(rest.begin(), rest.end());
  SignedPerm out{moved};
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

std::vector<Triple> d_interior(int n, int r) {
  const int d = n + 1 - r;
  std::vector<Triple> out;
  if (d % 2 == 0) {
    const int m = d / 2;
    for (const Tuple& i : enumerate_index_tuples(m, 3, n)) {
      Tuple ip = primed(i);
      auto rest = asc(pool_minus(2, n, i, ip));
      const int lead = (m % 2 == 1) ? -1 : 1;
      out.push_back({{Family::Plain, i},
                     join({{lead}, rest, seg_neg(ip), i}),
                     join({{lead}, rest, seg_neg(i), ip})});
    }
    for (Family fam : {Family::OnePrefixed, Family::TwoPrefixed}) {
      for (const Tuple& i : enumerate_index_tuples(m - 1, 4, n)) {
        Tuple ip = primed(i);
        auto pool = pool_minus(3, n, i, ip);
        const int t = *pool.begin();
        auto rest_all = asc(pool);
        pool.erase(t);
        auto bent = join({{-t}, asc(pool)});
        // v and w share the prefix here: flat for v_{1,i} at odd m and
        // v_{2,i} at even m, bent otherwise
        bool flat = (m % 2 == 1) == (fam == Family::OnePrefixed);
        const auto& pv = flat ? rest_all : bent;
        const auto& pw = pv;
        std::vector<int> mid_v =
            fam == Family::OnePrefixed ? std::vector<int>{1, 2}
                                       : std::vector<int>{-1, 2};
        std::vector<int> mid_w =
            fam == Family::OnePrefixed ? std::vector<int>{-2, -1}
                                       : std::vector<int>{-2, 1};
        out.push_back({{fam, i},
                       join({pv, seg_neg(ip), mid_v, i}),
                       join({pw, seg_neg(i), mid_w, ip})});
      }
    }
  } else {
    const int m = d / 2;
    for (const Tuple& i : enumerate_index_tuples(m, 4, n)) {
      Tuple ip = primed(i);
      auto rest = asc(pool_minus(3, n, i, ip));
      const int lead_v = (m % 2 == 1) ? -1 : 1;
      out.push_back({{Family::Plain, i},
                     join({{lead_v}, rest, seg_neg(ip), {2}, i}),
                     join({{-lead_v}, rest, seg_neg(i), {-2}, ip})});
    }
    // prefix pool for the suffix families; the lead entry of the prefix is
    // +-min(pool), which is 4 generically but larger when i_1 = 5 consumes
    // the 4 (forced by window validity, confirmed by brute maximality)
    for (Family fam : {Family::SuffixOne, Family::SuffixTwo}) {
      for (const Tuple& i : enumerate_index_tuples(m - 1, 5, n)) {
        Tuple ip = primed(i);
        auto pool = pool_minus(4, n, i, ip);
        const int u = *pool.begin();
        auto flat = asc(pool);
        pool.erase(u);
        auto bent = join({{-u}, asc(pool)});
        bool v_flat = (m % 2 == 1) == (fam == Family::SuffixOne);
        const auto& pv = v_flat ? flat : bent;
        const auto& pw = v_flat ? bent : flat;
        std::vector<int> mid_v =
            fam == Family::SuffixOne ? std::vector<int>{1, 2, 3}
                                     : std::vector<int>{-1, 2, 3};
        std::vector<int> mid_w =
            fam == Family::SuffixOne ? std::vector<int>{-3, -2, -1}
                                     : std::vector<int>{-3, -2, 1};
        out.push_back({{fam, i},
                       join({pv, seg_neg(ip), mid_v, i}),
                       join({pw, seg_neg(i), mid_w, ip})});
      }
    }
  }
  return out;
}

std::vector<Triple> closed_form(const RootSystem& rs, int r) {
  const int n = rs.rank();
  std::vector<Triple> out;
  if (rs.type() != LieType::D) {
    if (r == 1) {
      out.push_back({{Family::RankOne, {}}, bc_v_r1(n), bc_w_r1(n)});
    } else if (r == n) {
      auto body = by_step(2, n, 1);
      out.push_back({{Family::RankN, {}},
                     join({body, {1}}),
                     join({body, {-1}})});
    } else {
      out = bc_interior(n, r);
    }
  } else {
    if (r == 1) {
      out.push_back({{Family::RankOne, {}}, d_v_r1(n), d_w_r1(n)});
    } else if (r == 2) {
      out.push_back({{Family::RankTwo, {}},
                     d_r2_from_r1(d_v_r1(n), n - 1),
                     d_r2_from_r1(d_w_r1(n), n)});
    } else if (r == n) {
      auto body = by_step(3, n, 1);
      out.push_back({{Family::RankN, {}},
                     join({{1}, body, {2}}),
                     join({{-1}, body, {-2}})});
    } else {
      out = d_interior(n, r);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Triple& a, const Triple& b) { return a.label < b.label; });
  return out;
}

// ---- stated weights and products ----

Weight tuple_weight(int n, const Tuple& i) {
  Weight wt(n, Rational(0));
  for (int k : i) wt[k - 1] += Rational(1);
  return wt;
}

void add_at(Weight& wt, int j, Rational c) { wt[j - 1] += c; }

// v(omega_r) in the root basis where a closed form is stated; nullopt for
// the B/C r = 1 window, which is given without one
std::optional<Weight> stated_v_weight(const RootSystem& rs, int r,
                                      const ExtremalLabel& lab) {
  const int n = rs.rank();
  const LieType ty = rs.type();
  const Rational half(1, 2);
  switch (lab.family) {
    case Family::RankOne:
    case Family::RankTwo: {
      if (ty != LieType::D) return std::nullopt;
      // stated as a combination of 4*omega; r = 2 swaps the coefficients
      // of the first two simple roots
      Weight four(n, Rational(0));
      Rational c1, c2;
      switch (n % 4) {
        case 0:
          c1 = Rational(0), c2 = Rational(2);
          for (int k : by_step(4, n, 2)) add_at(four, k, Rational(2));
          break;
        case 2:
          c1 = Rational(2), c2 = Rational(0);
          for (int k : by_step(4, n, 2)) add_at(four, k, Rational(2));
          break;
        case 1:
          c1 = Rational(1), c2 = Rational(3);
          add_at(four, 3, Rational(2));
          for (int k : by_step(5, n, 2)) add_at(four, k, Rational(2));
          break;
        default:
          c1 = Rational(3), c2 = Rational(1);
          add_at(four, 3, Rational(2));
          for (int k : by_step(5, n, 2)) add_at(four, k, Rational(2));
          break;
      }
      if (lab.family == Family::RankTwo) std::swap(c1, c2);
      add_at(four, 1, c1);
      add_at(four, 2, c2);
      for (auto& c : four) c = c * Rational(1, 4);
      return four;
    }
    case Family::RankN: {
      Weight wt(n, Rational(0));
      if (ty == LieType::B) {
        add_at(wt, 1, Rational(1));
      } else if (ty == LieType::C) {
        add_at(wt, 1, half);
      } else {
        add_at(wt, 1, half);
        add_at(wt, 2, half);
      }
      return wt;
    }
    case Family::Plain: {
      Weight wt = tuple_weight(n, lab.tuple);
      if ((n + 1 - r) % 2 == 1) {
        if (ty == LieType::B) add_at(wt, 1, Rational(1));
        if (ty == LieType::C) add_at(wt, 1, half);
        if (ty == LieType::D) {
          add_at(wt, 1, half);
          add_at(wt, 2, half);
        }
      }
      return wt;
    }
    case Family::OnePrefixed:
    case Family::TwoPrefixed: {
      Weight wt = tuple_weight(n, lab.tuple);
      add_at(wt, lab.family == Family::OnePrefixed ? 1 : 2, Rational(1));
      return wt;
    }
    case Family::SuffixOne:
    case Family::SuffixTwo: {
      Weight wt = tuple_weight(n, lab.tuple);
      bool one = lab.family == Family::SuffixOne;
      add_at(wt, 1, one ? Rational(3, 2) : half);
      add_at(wt, 2, one ? half : Rational(3, 2));
      add_at(wt, 3, Rational(1));
      return wt;
    }
  }
  return std::nullopt;
}

// the stated reflection word taking v to w, applied on the left; for the
// D suffix families the product crosses over to the other family's v
struct StatedProduct {
  std::vector<int> word;
  Family from = Family::Plain;  // family of the v the word applies to
};

std::optional<StatedProduct> stated_w_product(const RootSystem& rs, int r,
                                              const ExtremalLabel& lab) {
  const int n = rs.rank();
  const bool bc = rs.type() != LieType::D;
  std::vector<int> word;
  switch (lab.family) {
    case Family::RankOne:
    case Family::RankTwo:
      return std::nullopt;
    case Family::RankN:
      word = bc ? std::vector<int>{1} : std::vector<int>{1, 2};
      return StatedProduct{word, lab.family};
    case Family::Plain:
      if ((n + 1 - r) % 2 == 1) word = bc ? std::vector<int>{1}
                                          : std::vector<int>{1, 2};
      word.insert(word.end(), lab.tuple.begin(), lab.tuple.end());
      return StatedProduct{word, Family::Plain};
    case Family::OnePrefixed:
    case Family::TwoPrefixed:
      word = {lab.family == Family::OnePrefixed ? 1 : 2};
      word.insert(word.end(), lab.tuple.begin(), lab.tuple.end());
      return StatedProduct{word, lab.family};
    case Family::SuffixOne:
      // w_{i,1} = s_1 s_3 s_2 s_{i_1} ... s_{i_{m-1}} v_{i,2}
      word = {1, 3, 2};
      word.insert(word.end(), lab.tuple.begin(), lab.tuple.end());
      return StatedProduct{word, Family::SuffixTwo};
    case Family::SuffixTwo:
      // w_{i,2} = s_2 s_3 s_1 s_{i_1} ... s_{i_{m-1}} v_{i,1}
      word = {2, 3, 1};
      word.insert(word.end(), lab.tuple.begin(), lab.tuple.end());
      return StatedProduct{word, Family::SuffixOne};
  }
  return std::nullopt;
}

// negation of the matched v weight holds everywhere it is stated, which is
// every family except the D r = 1, 2 windows at odd n
bool w_weight_is_negated(const RootSystem& rs, const ExtremalLabel& lab) {
  if (lab.family == Family::RankOne || lab.family == Family::RankTwo)
    return rs.type() != LieType::D || rs.rank() % 2 == 0;
  return true;
}

std::string describe(const RootSystem& rs, int r, const ExtremalLabel& lab) {
  std::ostringstream os;
  os << rs.name() << " r=" << r << " [" << family_name(lab.family) << " "
     << lab.str() << "]";
  return os.str();
}

}  // namespace

const char* family_name(Family f) {
  switch (f) {
    case Family::Plain: return "plain";
    case Family::OnePrefixed: return "one_prefixed";
    case Family::TwoPrefixed: return "two_prefixed";
    case Family::SuffixOne: return "suffix_one";
    case Family::SuffixTwo: return "suffix_two";
    case Family::RankOne: return "rank_one";
    case Family::RankTwo: return "rank_two";
    case Family::RankN: return "rank_n";
  }
  return "?";
}

std::string ExtremalLabel::str() const {
  auto tup = [this]() {
    std::string s = "(";
    for (size_t k = 0; k < tuple.size(); ++k) {
      if (k) s += ',';
      s += std::to_string(tuple[k]);
    }
    return s + ")";
  };
  switch (family) {
    case Family::Plain: return tup();
    case Family::OnePrefixed: return tuple.empty() ? "1" : "1," + tup();
    case Family::TwoPrefixed: return tuple.empty() ? "2" : "2," + tup();
    case Family::SuffixOne: return tuple.empty() ? "1" : tup() + ",1";
    case Family::SuffixTwo: return tuple.empty() ? "2" : tup() + ",2";
    default: return "-";
  }
}

std::vector<std::vector<int>> enumerate_index_tuples(int m, int s, int t) {
  std::vector<std::vector<int>> out;
  if (m < 0) return out;
  if (m == 0) {
    out.push_back({});
    return out;
  }
  std::vector<int> cur;
  auto rec = [&](auto&& self, int nxt) -> void {
    if (static_cast<int>(cur.size()) == m) {
      out.push_back(cur);
      return;
    }
    for (int k = nxt; k <= t; ++k) {
      cur.push_back(k);
      self(self, k + 2);
      cur.pop_back();
    }
  };
  rec(rec, s);
  return out;
}

std::vector<ExtremalEntry> maximal_v(const RootSystem& rs, int r) {
  CosetContext ctx(rs, r);
  const Weight omega = rs.fundamental_weight(r);
  std::vector<ExtremalEntry> out;
  for (const Triple& tr : closed_form(rs, r)) {
    check(is_valid_window(tr.v), describe(rs, r, tr.label) + ": bad v window");
    if (rs.type() == LieType::D)
      check(is_d_element(tr.v), describe(rs, r, tr.label) + ": v sign parity");
    check(is_min_rep(ctx, tr.v), describe(rs, r, tr.label) + ": v not minimal");
    Weight wt = apply_to_weight(rs, tr.v, omega);
    check(sign_profile(wt) == SignProfile::AllNonneg,
          describe(rs, r, tr.label) + ": v weight not nonnegative");
    if (auto stated = stated_v_weight(rs, r, tr.label))
      check(wt == *stated, describe(rs, r, tr.label) + ": v weight form");
    out.push_back({tr.label, tr.v, std::move(wt)});
  }
  return out;
}

std::vector<ExtremalEntry> minimal_w(const RootSystem& rs, int r) {
  CosetContext ctx(rs, r);
  const Weight omega = rs.fundamental_weight(r);
  auto triples = closed_form(rs, r);
  std::map<Family, std::map<Tuple, const Triple*>> by_label;
  for (const Triple& tr : triples) by_label[tr.label.family][tr.label.tuple] = &tr;

  std::vector<ExtremalEntry> out;
  for (const Triple& tr : triples) {
    check(is_valid_window(tr.w), describe(rs, r, tr.label) + ": bad w window");
    if (rs.type() == LieType::D)
      check(is_d_element(tr.w), describe(rs, r, tr.label) + ": w sign parity");
    check(is_min_rep(ctx, tr.w), describe(rs, r, tr.label) + ": w not minimal");
    Weight wt = apply_to_weight(rs, tr.w, omega);
    check(sign_profile(wt) == SignProfile::AllNonpos,
          describe(rs, r, tr.label) + ": w weight not nonpositive");
    if (w_weight_is_negated(rs, tr.label)) {
      Weight vwt = apply_to_weight(rs, tr.v, omega);
      check(wt == weight_neg(vwt), describe(rs, r, tr.label) + ": w weight negation");
    }
    if (auto prod = stated_w_product(rs, r, tr.label)) {
      const Triple* src = by_label[prod->from][tr.label.tuple];
      check(src != nullptr, describe(rs, r, tr.label) + ": missing product source");
      SignedPerm lhs = sp_compose(from_word(rs, prod->word), src->v);
      check(lhs == tr.w, describe(rs, r, tr.label) + ": w product form");
    }
    out.push_back({tr.label, tr.w, std::move(wt)});
  }
  return out;
}

std::vector<std::pair<ExtremalEntry, ExtremalEntry>> matched_pairs(
    const RootSystem& rs, int r) {
  auto vs = maximal_v(rs, r);
  auto ws = minimal_w(rs, r);
  std::map<Family, std::map<Tuple, const ExtremalEntry*>> windex;
  for (const auto& e : ws) windex[e.label.family][e.label.tuple] = &e;

  std::vector<std::pair<ExtremalEntry, ExtremalEntry>> out;
  for (const auto& ve : vs) {
    Family partner = ve.label.family;
    if (partner == Family::SuffixOne) partner = Family::SuffixTwo;
    else if (partner == Family::SuffixTwo) partner = Family::SuffixOne;
    const ExtremalEntry* we = windex[partner][ve.label.tuple];
    check(we != nullptr, describe(rs, r, ve.label) + ": missing matched w");
    out.emplace_back(ve, *we);
  }
  return out;
}

std::vector<SignedPerm> predicted_covers(const RootSystem& rs, int r,
                                         const ExtremalEntry& entry) {
  CosetContext ctx(rs, r);
  const int n = rs.rank();
  const LieType ty = rs.type();
  bool known = false;
  for (const auto& e : maximal_v(rs, r))
    if (e.label == entry.label && e.element == entry.element) known = true;
  if (!known)
    throw std::invalid_argument("predicted_covers: not an extremal entry of " +
                                rs.name() + " r=" + std::to_string(r));

  auto simple = [&](int j) { return rs.simple_root(j); };
  auto chain = [&](std::initializer_list<int> js) {
    Weight b(n, Rational(0));
    for (int j : js) b = weight_add(b, simple(j));
    return b;
  };

  std::vector<Weight> roots;
  const Family fam = entry.label.family;
  const Tuple& i = entry.label.tuple;

  if (fam == Family::RankOne || fam == Family::RankTwo) {
    std::vector<int> ks;
    if (ty != LieType::D) {
      ks = (n % 2 == 0) ? by_step(2, n, 2) : by_step(1, n, 2);
    } else {
      bool swap12 = fam == Family::RankTwo;
      switch (n % 4) {
        case 0: ks = swap12 ? join({{1}, by_step(4, n, 2)}) : by_step(2, n, 2); break;
        case 2: ks = swap12 ? by_step(2, n, 2) : join({{1}, by_step(4, n, 2)}); break;
        case 1: ks = join({{swap12 ? 1 : 2}, by_step(5, n, 2)}); break;
        default: ks = join({{swap12 ? 2 : 1}, by_step(5, n, 2)}); break;
      }
    }
    for (int k : ks) roots.push_back(simple(k));
  } else if (fam == Family::RankN) {
    roots.push_back(simple(1));
    if (ty == LieType::D) roots.push_back(simple(2));
  } else {
    int lo = 0;
    if (ty != LieType::D) {
      lo = (n + 1 - r) % 2 == 0 ? 2 : 3;
      if ((n + 1 - r) % 2 == 1) roots.push_back(simple(1));
    } else if ((n + 1 - r) % 2 == 0) {
      if (fam == Family::Plain) {
        lo = 3;
        if (!i.empty() && i[0] == 3) {
          roots.push_back(chain({1, 3}));
          roots.push_back(chain({2, 3}));
        }
      } else {
        lo = 4;
        int lead = fam == Family::OnePrefixed ? 1 : 2;
        roots.push_back(simple(lead));
        if (i.empty() || i[0] >= lo + 1) roots.push_back(chain({lead, 3}));
      }
    } else {
      if (fam == Family::Plain) {
        lo = 4;
        roots.push_back(simple(1));
        roots.push_back(simple(2));
      } else {
        lo = 5;
        int lead = fam == Family::SuffixOne ? 1 : 2;
        roots.push_back(simple(lead));
        if (i.empty() || i[0] >= lo + 1) roots.push_back(chain({lead, 3, 4}));
      }
    }
    const int p = static_cast<int>(i.size());
    for (int t = 1; t <= p; ++t) {
      const int it = i[t - 1];
      roots.push_back(simple(it));
      if ((t < p && i[t] - it >= 3) || (t == p && it <= n - 1))
        roots.push_back(chain({it, it + 1}));
      if ((t > 1 && it - i[t - 2] >= 3) || (t == 1 && it >= lo + 1))
        roots.push_back(chain({it - 1, it}));
    }
  }

  std::vector<SignedPerm> out;
  out.reserve(roots.size());
  for (const Weight& beta : roots)
    out.push_back(sp_compose(reflection(rs, beta), entry.element));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace richss
