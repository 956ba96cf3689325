#pragma once

// Sequences over the alphabet [n], forbidden patterns in canonical form, and
// containment up to letter isomorphism. This is the kernel the saturation
// engine, the constructions and both exact engines are built on.

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "satseq/error.hpp"

namespace satseq {

using Letter = int;  // 1-based letter value

// A finite sequence of letters drawn from {1, ..., alphabet}. The empty
// sequence is a legal degenerate input: it avoids every nonempty pattern and
// is r-sparse for every r.
struct Seq {
  std::vector<Letter> letters;
  int alphabet = 0;

  Seq() = default;
  Seq(std::vector<Letter> ls, int n) : letters(std::move(ls)), alphabet(n) {
    if (alphabet < 0) raise(Errc::bad_parameters, "alphabet size must be >= 0");
    for (Letter v : letters) {
      if (v < 1) raise(Errc::invalid_character, "letters are 1-based positive integers");
      if (v > alphabet)
        raise(Errc::letter_out_of_alphabet,
              "letter " + std::to_string(v) + " exceeds alphabet size " + std::to_string(alphabet));
    }
  }

  int size() const { return static_cast<int>(letters.size()); }
  bool empty() const { return letters.empty(); }

  friend bool operator==(const Seq& a, const Seq& b) {
    return a.letters == b.letters && a.alphabet == b.alphabet;
  }
};

// A forbidden pattern, stored in canonical form: the first occurrences of its
// distinct letters are 1, 2, 3, ... in order.
class Pattern {
 public:
  Pattern() = default;

  // Canonicalizes an arbitrary positive-letter vector.
  static Pattern from_letters(const std::vector<Letter>& raw) {
    if (raw.empty()) raise(Errc::empty_input, "pattern must be nonempty");
    Pattern p;
    std::vector<Letter> name;  // raw letter -> canonical value, in discovery order
    p.letters_.reserve(raw.size());
    for (Letter v : raw) {
      if (v < 1) raise(Errc::invalid_character, "pattern letters must be positive");
      auto it = std::find(name.begin(), name.end(), v);
      if (it == name.end()) {
        name.push_back(v);
        p.letters_.push_back(static_cast<Letter>(name.size()));
      } else {
        p.letters_.push_back(static_cast<Letter>(it - name.begin()) + 1);
      }
    }
    p.r_ = static_cast<int>(name.size());
    return p;
  }

  // Parses a lowercase a-z word; 'a' need not come first ("bab" -> 121).
  static Pattern parse(const std::string& text) {
    if (text.empty()) raise(Errc::empty_input, "empty pattern");
    std::vector<Letter> raw;
    raw.reserve(text.size());
    for (char c : text) {
      if (c < 'a' || c > 'z')
        raise(Errc::invalid_character, std::string("invalid pattern character '") + c + "'");
      raw.push_back(c - 'a' + 1);
    }
    return from_letters(raw);
  }

  const std::vector<Letter>& letters() const { return letters_; }
  int r() const { return r_; }                              // distinct letters
  int length() const { return static_cast<int>(letters_.size()); }

  // Canonical a-z spelling (defined for r <= 26, which covers everything here).
  std::string str() const {
    std::string out;
    out.reserve(letters_.size());
    for (Letter v : letters_) out.push_back(static_cast<char>('a' + v - 1));
    return out;
  }

  // Occurrence count of each of the r letters.
  std::vector<int> multiplicities() const {
    std::vector<int> m(r_ + 1, 0);
    for (Letter v : letters_) m[v]++;
    return m;
  }

  friend bool operator==(const Pattern& a, const Pattern& b) {
    return a.letters_ == b.letters_;
  }

 private:
  std::vector<Letter> letters_;
  int r_ = 0;
};

// ---------------------------------------------------------------------------
// Text round-trip ("1,2,10" or whitespace separated).

inline Seq parse_seq(const std::string& text, std::optional<int> alphabet = std::nullopt) {
  std::vector<Letter> ls;
  std::string tok;
  auto flush = [&] {
    if (tok.empty()) return;
    for (char c : tok)
      if (c < '0' || c > '9')
        raise(Errc::parse_error, "invalid sequence token '" + tok + "'");
    long v = std::stol(tok);
    if (v < 1) raise(Errc::parse_error, "sequence letters must be >= 1");
    ls.push_back(static_cast<Letter>(v));
    tok.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r')
      flush();
    else
      tok.push_back(c);
  }
  flush();
  int n = alphabet ? *alphabet : (ls.empty() ? 0 : *std::max_element(ls.begin(), ls.end()));
  return Seq(std::move(ls), n);
}

inline std::string format_seq(const Seq& s) {
  std::string out;
  for (int i = 0; i < s.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(s.letters[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Canonicalization and sparsity.

// Renames letters so first occurrences read 1, 2, 3, ...; idempotent and
// length-preserving, output is isomorphic to the input.
inline Seq canonicalize(const Seq& s) {
  std::vector<Letter> name(s.alphabet + 1, 0);
  int next = 0;
  Seq out;
  out.alphabet = s.alphabet;
  out.letters.reserve(s.letters.size());
  for (Letter v : s.letters) {
    if (!name[v]) name[v] = ++next;
    out.letters.push_back(name[v]);
  }
  return out;
}

// True iff every window of r consecutive letters is pairwise distinct,
// equivalently no two equal letters sit at distance < r.
inline bool is_r_sparse(const Seq& s, int r) {
  if (r < 1) raise(Errc::bad_parameters, "sparsity parameter must be >= 1");
  const auto& a = s.letters;
  for (int i = 0; i < s.size(); ++i)
    for (int j = std::max(0, i - r + 1); j < i; ++j)
      if (a[j] == a[i]) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Containment up to isomorphism.
//
// The matcher backtracks over pattern positions, binding pattern letters to
// sequence letters on first use. Bindings are tried in increasing sequence-
// letter order and positions left to right, so the returned copy is the
// lexicographically least witness under (letter assignment, positions).
// Once a letter is bound, advancing to the earliest next occurrence is
// complete: replacing any position of a copy by an earlier occurrence of the
// same letter leaves a copy.

namespace detail {

class Matcher {
 public:
  Matcher(const Seq& s, const Pattern& u)
      : seq_(s.letters),
        pat_(u.letters()),
        n_(s.alphabet),
        r_(u.r()),
        len_(u.length()) {
    occ_.assign(n_ + 1, {});
    for (int i = 0; i < static_cast<int>(seq_.size()); ++i) occ_[seq_[i]].push_back(i);
    // need_[k][c] = occurrences of pattern letter c at pattern positions >= k
    need_.assign(len_ + 1, std::vector<int>(r_ + 1, 0));
    for (int k = len_ - 1; k >= 0; --k) {
      need_[k] = need_[k + 1];
      need_[k][pat_[k]]++;
    }
    bind_.assign(r_ + 1, 0);
    used_.assign(n_ + 1, 0);
    pos_.assign(len_, -1);
  }

  // Least copy (0-based positions), or nullopt.
  std::optional<std::vector<int>> find() {
    reset();
    if (len_ > static_cast<int>(seq_.size())) return std::nullopt;
    if (match_from(0, 0)) return pos_;
    return std::nullopt;
  }

  // True iff some copy uses the 0-based position through.
  bool find_through(int through) {
    reset();
    if (through < 0 || through >= static_cast<int>(seq_.size()))
      raise(Errc::index_out_of_range, "position out of range");
    if (len_ > static_cast<int>(seq_.size())) return false;
    return match_pinned(0, 0, through);
  }

 private:
  void reset() {
    std::fill(bind_.begin(), bind_.end(), 0);
    std::fill(used_.begin(), used_.end(), 0);
  }

  // Earliest occurrence of letter v at position >= from, or -1.
  int next_occ(Letter v, int from) const {
    const auto& o = occ_[v];
    auto it = std::lower_bound(o.begin(), o.end(), from);
    return it == o.end() ? -1 : *it;
  }

  // Occurrences of v at positions >= from.
  int left(Letter v, int from) const {
    const auto& o = occ_[v];
    return static_cast<int>(o.end() - std::lower_bound(o.begin(), o.end(), from));
  }

  // Unconstrained match of pattern suffix k starting at sequence index from.
  bool match_from(int k, int from) {
    if (k == len_) return true;
    Letter c = pat_[k];
    if (bind_[c]) {
      int q = next_occ(bind_[c], from);
      if (q < 0 || left(bind_[c], q) < need_[k][c]) return false;
      pos_[k] = q;
      return match_from(k + 1, q + 1);
    }
    for (Letter w = 1; w <= n_; ++w) {
      if (used_[w]) continue;
      int q = next_occ(w, from);
      if (q < 0 || left(w, q) < need_[k][c]) continue;
      bind_[c] = w;
      used_[w] = 1;
      pos_[k] = q;
      if (match_from(k + 1, q + 1)) return true;
      bind_[c] = 0;
      used_[w] = 0;
    }
    return false;
  }

  // Match requiring some pattern position to land exactly on `through`.
  // Until that happens each pattern position either takes its earliest
  // occurrence strictly before `through` or is pinned to `through` itself;
  // afterwards the plain matcher finishes the suffix.
  bool match_pinned(int k, int from, int through) {
    if (k == len_) return false;
    if (from > through) return false;
    Letter c = pat_[k];
    if (bind_[c]) {
      Letter v = bind_[c];
      if (seq_[through] == v && left(v, through) >= need_[k][c]) {
        pos_[k] = through;
        if (match_from(k + 1, through + 1)) return true;
      }
      int q = next_occ(v, from);
      if (q < 0 || q >= through || left(v, q) < need_[k][c]) return false;
      pos_[k] = q;
      return match_pinned(k + 1, q + 1, through);
    }
    for (Letter w = 1; w <= n_; ++w) {
      if (used_[w]) continue;
      bool ok = false;
      bind_[c] = w;
      used_[w] = 1;
      if (seq_[through] == w && left(w, through) >= need_[k][c]) {
        pos_[k] = through;
        ok = match_from(k + 1, through + 1);
      }
      if (!ok) {
        int q = next_occ(w, from);
        if (q >= 0 && q < through && left(w, q) >= need_[k][c]) {
          pos_[k] = q;
          ok = match_pinned(k + 1, q + 1, through);
        }
      }
      if (ok) return true;
      bind_[c] = 0;
      used_[w] = 0;
    }
    return false;
  }

  const std::vector<Letter>& seq_;
  const std::vector<Letter>& pat_;
  int n_, r_, len_;
  std::vector<std::vector<int>> occ_;
  std::vector<std::vector<int>> need_;
  std::vector<Letter> bind_;
  std::vector<char> used_;
  std::vector<int> pos_;
};

}  // namespace detail

// Least copy of u in s as 1-based increasing positions, or nullopt if s
// avoids u.
inline std::optional<std::vector<int>> contains(const Seq& s, const Pattern& u) {
  detail::Matcher m(s, u);
  auto hit = m.find();
  if (!hit) return std::nullopt;
  for (int& p : *hit) ++p;
  return hit;
}

inline bool avoids(const Seq& s, const Pattern& u) { return !contains(s, u); }

// True iff some copy of u uses the 1-based position pos.
inline bool contains_through(const Seq& s, const Pattern& u, int pos) {
  if (pos < 1 || pos > s.size()) raise(Errc::index_out_of_range, "position out of range");
  detail::Matcher m(s, u);
  return m.find_through(pos - 1);
}

}  // namespace satseq
