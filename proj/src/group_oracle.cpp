#include "horolab/group_oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

namespace horolab::erg {

void GroupSpec::validate() const {
  if (free_rank < 0) throw ConfigError("group rank must be nonnegative");
  if (free_kind) {
    if (free_rank < 1) throw ConfigError("free group rank must be at least 1");
    if (!moduli.empty()) throw ConfigError("free groups take no torsion factors");
  }
  for (long long m : moduli) {
    if (m < 2) throw ConfigError("torsion moduli must be at least 2");
  }
  if (symbol_count() < 1) throw ConfigError("group needs at least one generator");
  if (symbol_count() > 26) throw ConfigError("at most 26 generator symbols supported");
}

std::string GroupSpec::describe() const {
  if (free_kind) return "F_" + std::to_string(free_rank);
  std::string s;
  if (free_rank == 1) s = "Z";
  if (free_rank > 1) s = "Z^" + std::to_string(free_rank);
  for (long long m : moduli) {
    if (!s.empty()) s += " x ";
    s += "Z/" + std::to_string(m);
  }
  if (s.empty()) s = "trivial";
  return s;
}

AbElem ab_identity(const GroupSpec& g) {
  return AbElem(static_cast<std::size_t>(g.symbol_count()), 0);
}

AbElem ab_reduce(const GroupSpec& g, AbElem v) {
  for (std::size_t j = 0; j < g.moduli.size(); ++j) {
    long long m = g.moduli[j];
    long long& c = v[g.free_rank + j];
    c %= m;
    if (c < 0) c += m;
  }
  return v;
}

AbElem ab_add(const GroupSpec& g, const AbElem& x, const AbElem& y) {
  AbElem out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + y[i];
  return ab_reduce(g, out);
}

AbElem ab_negate(const GroupSpec& g, const AbElem& x) {
  AbElem out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = -x[i];
  return ab_reduce(g, out);
}

bool ab_is_identity(const AbElem& x) {
  return std::all_of(x.begin(), x.end(), [](long long c) { return c == 0; });
}

AbElem word_to_abelian(const GroupSpec& g, const ReducedWord& w) {
  AbElem v = ab_identity(g);
  for (std::size_t i = 0; i < w.length(); ++i) {
    Letter l = w.at(i);
    int sym = l / 2;
    if (sym >= g.symbol_count()) throw MalformedWordError("letter outside generator alphabet");
    v[sym] += (l % 2 == 0) ? 1 : -1;
  }
  return ab_reduce(g, v);
}

ReducedWord abelian_to_word(const GroupSpec& g, const AbElem& v) {
  std::vector<Letter> letters;
  for (int sym = 0; sym < g.symbol_count(); ++sym) {
    long long e = v[sym];
    if (sym >= g.free_rank) {
      long long m = g.moduli[sym - g.free_rank];
      long long s = ((e % m) + m) % m;
      e = (s <= m - s) ? s : s - m;  // short way around, ties positive
    }
    Letter l = (e >= 0) ? static_cast<Letter>(2 * sym) : static_cast<Letter>(2 * sym + 1);
    for (long long i = 0; i < std::llabs(e); ++i) letters.push_back(l);
  }
  return ReducedWord::from_letters(letters);
}

long long ab_norm(const GroupSpec& g, const AbElem& v) {
  long long n = 0;
  for (int sym = 0; sym < g.symbol_count(); ++sym) {
    if (sym < g.free_rank) {
      n += std::llabs(v[sym]);
    } else {
      long long m = g.moduli[sym - g.free_rank];
      long long s = ((v[sym] % m) + m) % m;
      n += std::min(s, m - s);
    }
  }
  return n;
}

std::vector<AbElem> abelian_ball(const GroupSpec& g, int R) {
  if (R < 0) throw ConfigError("ball radius must be nonnegative");
  std::vector<AbElem> out;
  AbElem cur = ab_identity(g);
  std::function<void(int, long long)> rec = [&](int sym, long long budget) {
    if (sym == g.symbol_count()) {
      out.push_back(cur);
      return;
    }
    if (sym < g.free_rank) {
      for (long long e = -budget; e <= budget; ++e) {
        cur[sym] = e;
        rec(sym + 1, budget - std::llabs(e));
      }
    } else {
      long long m = g.moduli[sym - g.free_rank];
      for (long long s = 0; s < m; ++s) {
        long long cost = std::min(s, m - s);
        if (cost > budget) continue;
        cur[sym] = s;
        rec(sym + 1, budget - cost);
      }
    }
    cur[sym] = 0;
  };
  rec(0, R);
  std::sort(out.begin(), out.end(), [&](const AbElem& a, const AbElem& b) {
    long long na = ab_norm(g, a), nb = ab_norm(g, b);
    if (na != nb) return na < nb;
    return a < b;
  });
  return out;
}

std::vector<ReducedWord> free_ball(int rank, int R, std::size_t cap) {
  if (rank < 1) throw ConfigError("free rank must be at least 1");
  if (R < 0) throw ConfigError("ball radius must be nonnegative");
  std::vector<ReducedWord> out;
  std::vector<Letter> cur;
  std::function<void()> rec = [&]() {
    if (out.size() >= cap) throw CapacityError("free ball exceeds element cap");
    out.push_back(ReducedWord::from_letters(cur));
    if (static_cast<int>(cur.size()) == R) return;
    for (Letter l = 0; l < 2 * rank; ++l) {
      if (!cur.empty() && l == letter_inverse(cur.back())) continue;
      cur.push_back(l);
      rec();
      cur.pop_back();
    }
  };
  rec();
  std::sort(out.begin(), out.end(), [](const ReducedWord& a, const ReducedWord& b) {
    return a.shorter_lex_less(b);
  });
  return out;
}

}  // namespace horolab::erg
