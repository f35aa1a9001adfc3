#include "spinal/word.hpp"

#include "spinal/errors.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace spinal {

std::string Word::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(letters_[i]);
  }
  return out;
}

std::string_view to_string(WordClass cls) {
  return cls == WordClass::c1 ? "c1" : "c2";
}

namespace {

std::optional<std::string> base_violation(const Word& w) {
  const int n = w.n();
  const int k = w.k();
  if (n < 0 || k < 0 || k > n) {
    return "parameters out of range (need 0 <= k <= n)";
  }
  if (w.size() != static_cast<std::size_t>(2 * n + k)) {
    return "length is " + std::to_string(w.size()) + ", expected 2n+k = " +
           std::to_string(2 * n + k);
  }
  std::vector<int> count(n + 1, 0);
  for (int a : w.letters()) {
    if (a < 1 || a > n) return "letter " + std::to_string(a) + " outside 1.." + std::to_string(n);
    ++count[a];
  }
  int thrice = 0;
  int twice = 0;
  for (int a = 1; a <= n; ++a) {
    if (count[a] == 3) ++thrice;
    else if (count[a] == 2) ++twice;
    else return "letter " + std::to_string(a) + " occurs " + std::to_string(count[a]) + " times";
  }
  if (thrice != k || twice != n - k) {
    return "expected " + std::to_string(k) + " letters occurring three times, found " +
           std::to_string(thrice);
  }
  // prefix dominance: #(z,a_i) = 0 or #(z,a_i) >= #(z,a_j) for all j >= i
  std::fill(count.begin(), count.end(), 0);
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    const int a = w[pos];
    ++count[a];
    // only the counter of `a` changed, so only pairs involving `a` need rechecking
    for (int i = 1; i <= n; ++i) {
      const int lo = std::min(i, a);
      const int hi = std::max(i, a);
      if (count[lo] > 0 && count[lo] < count[hi]) {
        return "prefix dominance fails at position " + std::to_string(pos + 1) + " (a_" +
               std::to_string(lo) + " vs a_" + std::to_string(hi) + ")";
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> suffix_violation(const Word& w) {
  const int n = w.n();
  const int k = w.k();
  const std::size_t start = w.size() - static_cast<std::size_t>(n - k);
  for (int j = k + 1; j <= n; ++j) {
    if (w[start + static_cast<std::size_t>(j - k - 1)] != j) {
      return "word does not end with the suffix a_" + std::to_string(k + 1) + "..a_" +
             std::to_string(n);
    }
  }
  return std::nullopt;
}

// Positions (0-based) of the second and third occurrences of each a_i, i <= k.
std::vector<std::pair<std::size_t, std::size_t>> late_occurrences(const Word& w) {
  std::vector<std::pair<std::size_t, std::size_t>> at(static_cast<std::size_t>(w.k()) + 1);
  std::vector<int> seen(static_cast<std::size_t>(w.n()) + 1, 0);
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    const int a = w[pos];
    const int c = ++seen[a];
    if (a <= w.k()) {
      if (c == 2) at[a].first = pos;
      if (c == 3) at[a].second = pos;
    }
  }
  return at;
}

} // namespace

std::optional<std::string> class_violation(const Word& w, WordClass cls) {
  if (auto v = base_violation(w)) return v;
  if (auto v = suffix_violation(w)) return v;
  const auto at = late_occurrences(w);
  for (int i = 1; i <= w.k(); ++i) {
    const auto [second, third] = at[i];
    if (cls == WordClass::c1) {
      if (third != second + 1) {
        return "second and third occurrences of a_" + std::to_string(i) + " are not adjacent";
      }
    } else {
      for (std::size_t p = second + 1; p < third; ++p) {
        if (w[p] <= w.k()) {
          return "a_" + std::to_string(w[p]) + " lies between the second and third occurrences of a_" +
                 std::to_string(i);
        }
      }
    }
  }
  return std::nullopt;
}

bool in_class_c(const Word& w) { return !base_violation(w); }
bool in_class_c1(const Word& w) { return !class_violation(w, WordClass::c1); }
bool in_class_c2(const Word& w) { return !class_violation(w, WordClass::c2); }
bool in_class(const Word& w, WordClass cls) { return !class_violation(w, cls); }

Word canonicalize_tilde(const Word& w, WordClass cls) {
  if (auto v = class_violation(w, cls)) {
    throw ClassMembershipError("word not in " + std::string(to_string(cls)) + ": " + *v);
  }
  std::vector<int> letters(w.letters().begin(), w.letters().end());
  const std::size_t prefix = letters.size() - static_cast<std::size_t>(w.n() - w.k());
  int next = w.k() + 1;
  for (std::size_t p = 0; p < prefix; ++p) {
    if (letters[p] > w.k()) letters[p] = next++;
  }
  return Word(std::move(letters), w.n(), w.k());
}

bool equivalent(const Word& a, const Word& b, WordClass cls) {
  return canonicalize_tilde(a, cls) == canonicalize_tilde(b, cls);
}

PairPartition PairPartition::normalized() const {
  if (n < 0 || k < 0 || k > n) throw MalformedPartitionError("need 0 <= k <= n");
  const int m = n + k;
  if (pairs.size() != static_cast<std::size_t>(k)) {
    throw MalformedPartitionError("expected " + std::to_string(k) + " pairs");
  }
  std::vector<int> used(static_cast<std::size_t>(m) + 1, 0);
  PairPartition out{n, k, {}, {}};
  for (auto [a, b] : pairs) {
    if (a > b) std::swap(a, b);
    if (a < 1 || b > m || a == b) throw MalformedPartitionError("bad pair");
    if (used[a]++ || used[b]++) throw MalformedPartitionError("pairs overlap");
    out.pairs.emplace_back(a, b);
  }
  for (int e = 1; e <= m; ++e) {
    if (!used[e]) out.singletons.push_back(e);
  }
  if (!singletons.empty() || n - k == 0) {
    auto given = singletons;
    std::sort(given.begin(), given.end());
    if (given != out.singletons) throw MalformedPartitionError("singletons do not complement the pairs");
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

Word partition_to_word_c1(const PairPartition& partition) {
  const PairPartition p = partition.normalized();
  const int m = p.n + p.k;
  // slot content: positive = first occurrence of a letter, negative = block
  std::vector<int> slot(static_cast<std::size_t>(m) + 1, 0);
  auto by_max = p.pairs;
  std::sort(by_max.begin(), by_max.end(),
            [](const auto& x, const auto& y) { return x.second < y.second; });
  for (int i = 0; i < p.k; ++i) {
    slot[by_max[i].first] = i + 1;
    slot[by_max[i].second] = -(i + 1);
  }
  int next = p.k + 1;
  for (int e : p.singletons) slot[e] = next++;

  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(2 * p.n + p.k));
  for (int e = 1; e <= m; ++e) {
    if (slot[e] < 0) {
      letters.push_back(-slot[e]);
      letters.push_back(-slot[e]);
    } else {
      letters.push_back(slot[e]);
    }
  }
  for (int j = p.k + 1; j <= p.n; ++j) letters.push_back(j);
  return Word(std::move(letters), p.n, p.k);
}

PairPartition word_to_partition_c1(const Word& w) {
  if (auto v = class_violation(w, WordClass::c1)) {
    throw ClassMembershipError("word not in c1: " + *v);
  }
  const int k = w.k();
  const std::size_t prefix = w.size() - static_cast<std::size_t>(w.n() - k);
  std::vector<int> first(static_cast<std::size_t>(k) + 1, 0);
  std::vector<int> seen(static_cast<std::size_t>(k) + 1, 0);
  PairPartition p{w.n(), k, {}, {}};
  int position = 0;
  for (std::size_t i = 0; i < prefix; ++i) {
    const int a = w[i];
    ++position;
    if (a > k) {
      p.singletons.push_back(position);
      continue;
    }
    if (++seen[a] == 1) {
      first[a] = position;
    } else {
      // second occurrence opens the compressed block; its partner follows
      p.pairs.emplace_back(first[a], position);
      ++seen[a];
      ++i;
    }
  }
  return p.normalized();
}

// ---------------------------------------------------------------------------

std::string LrqWord::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out += ' ';
    switch (tokens[i].kind) {
    case LrqToken::Kind::L: out += 'L'; break;
    case LrqToken::Kind::R: out += 'R' + std::to_string(tokens[i].index); break;
    case LrqToken::Kind::Q: out += 'Q' + std::to_string(tokens[i].index); break;
    }
  }
  return out;
}

LrqWord parse_lrq(std::string_view text) {
  LrqWord u;
  int line = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r' || c == ',') {
      ++i;
      continue;
    }
    if (c == 'L') {
      u.tokens.push_back({LrqToken::Kind::L, 0});
      ++i;
      continue;
    }
    if (c == 'R' || c == 'Q') {
      std::size_t j = i + 1;
      while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
      int index = 0;
      if (j == i + 1 || std::from_chars(text.data() + i + 1, text.data() + j, index).ec != std::errc{} ||
          index < 1) {
        throw ParseError(line, std::string("token ") + c + " needs a positive index");
      }
      u.tokens.push_back({c == 'R' ? LrqToken::Kind::R : LrqToken::Kind::Q, index});
      i = j;
      continue;
    }
    throw ParseError(line, std::string("unexpected character '") + c + "'");
  }
  int ls = 0;
  int rs = 0;
  for (const auto& t : u.tokens) {
    if (t.kind == LrqToken::Kind::L) ++ls;
    if (t.kind == LrqToken::Kind::R) ++rs;
  }
  u.n = ls + 1;
  u.k = rs;
  return u;
}

void check_lrq(const LrqWord& u) {
  using K = LrqToken::Kind;
  if (u.n < 1 || u.k < 0) throw MalformedLrqError("need n >= 1 and k >= 0");
  const auto& t = u.tokens;
  if (t.size() != static_cast<std::size_t>(u.n - 1 + 2 * u.k)) {
    throw MalformedLrqError("expected " + std::to_string(u.n - 1 + 2 * u.k) + " tokens");
  }
  std::vector<int> r_at(static_cast<std::size_t>(u.k) + 1, -1);
  std::vector<int> q_at(static_cast<std::size_t>(u.k) + 1, -1);
  int ls = 0;
  for (std::size_t p = 0; p < t.size(); ++p) {
    if (t[p].kind == K::L) {
      ++ls;
      continue;
    }
    if (t[p].index < 1 || t[p].index > u.k) throw MalformedLrqError("token index out of range");
    auto& slot = t[p].kind == K::R ? r_at[t[p].index] : q_at[t[p].index];
    if (slot >= 0) throw MalformedLrqError("repeated token " + LrqWord{{t[p]}, 0, 0}.to_string());
    slot = static_cast<int>(p);
  }
  if (ls != u.n - 1) throw MalformedLrqError("expected " + std::to_string(u.n - 1) + " L tokens");
  for (int i = 1; i <= u.k; ++i) {
    const int r = r_at[i];
    const int q = q_at[i];
    if (r < 0 || q < 0) throw MalformedLrqError("missing R" + std::to_string(i) + " or Q" + std::to_string(i));
    if (i > 1 && r_at[i - 1] > r) throw MalformedLrqError("R tokens out of bottom-to-top order");
    // the spine parent of a reticulation carries a leaf
    if (static_cast<std::size_t>(r) + 1 >= t.size() || t[r + 1].kind != K::L) {
      throw MalformedLrqError("R" + std::to_string(i) + " is not followed by L");
    }
    if (q <= r + 1) throw MalformedLrqError("Q" + std::to_string(i) + " does not lie above R" + std::to_string(i));
    if (t[q - 1].kind == K::R) {
      throw MalformedLrqError("Q" + std::to_string(i) + " would have two reticulation children");
    }
  }
}

TransformSteps transform_t_steps(const LrqWord& u) {
  check_lrq(u);
  using K = LrqToken::Kind;
  const int k = u.k;
  const auto& t = u.tokens;
  TransformSteps steps;
  steps.substituted.assign(t.size(), 0);
  for (std::size_t p = 0; p < t.size(); ++p) {
    if (t[p].kind == K::R) {
      steps.substituted[p] = k + 1 - t[p].index;
      steps.substituted[p + 1] = k + 1 - t[p].index;
    } else if (t[p].kind == K::Q) {
      steps.substituted[p] = k + 1 - t[p].index;
    }
  }
  steps.lettered = steps.substituted;
  int next = k + 1;
  for (std::size_t p = t.size(); p-- > 0;) {
    if (steps.lettered[p] == 0) steps.lettered[p] = next++;
  }
  steps.reversed.assign(steps.lettered.rbegin(), steps.lettered.rend());
  std::vector<int> letters = steps.reversed;
  for (int j = k + 1; j <= u.n - 1; ++j) letters.push_back(j);
  steps.result = Word(std::move(letters), u.n - 1, k);
  return steps;
}

Word transform_t(const LrqWord& u) { return transform_t_steps(u).result; }

// ---------------------------------------------------------------------------

std::string format_word_text(const Word& w) {
  return "n=" + std::to_string(w.n()) + " k=" + std::to_string(w.k()) + "\n" + w.to_string() + "\n";
}

namespace {

int parse_int(std::string_view s, int line, std::string_view what) {
  int v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(line, "invalid " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

} // namespace

Word parse_word_text(std::string_view text) {
  std::vector<std::string_view> lines;
  for (std::size_t start = 0; start <= text.size();) {
    const auto nl = text.find('\n', start);
    const auto end = nl == std::string_view::npos ? text.size() : nl;
    lines.push_back(text.substr(start, end - start));
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  std::size_t i = 0;
  while (i < lines.size() && trim(lines[i]).empty()) ++i;
  if (i == lines.size()) throw ParseError(0, "missing header line \"n=<int> k=<int>\"");
  const int header_line = static_cast<int>(i) + 1;
  std::optional<int> n;
  std::optional<int> k;
  std::istringstream header{std::string(trim(lines[i]))};
  std::string field;
  while (header >> field) {
    const auto eq = field.find('=');
    if (eq == std::string::npos) throw ParseError(header_line, "expected key=value, got '" + field + "'");
    const auto key = std::string_view(field).substr(0, eq);
    const int value = parse_int(std::string_view(field).substr(eq + 1), header_line, key);
    if (key == "n") n = value;
    else if (key == "k") k = value;
    else throw ParseError(header_line, "unknown header key '" + std::string(key) + "'");
  }
  if (!n || !k) throw ParseError(header_line, "header needs both n and k");

  std::vector<int> letters;
  bool body_seen = false;
  for (std::size_t j = i + 1; j < lines.size(); ++j) {
    const auto body = trim(lines[j]);
    if (body.empty()) continue;
    if (body_seen) throw ParseError(static_cast<int>(j) + 1, "unexpected extra line");
    body_seen = true;
    std::size_t start = 0;
    while (start <= body.size()) {
      const auto comma = body.find(',', start);
      const auto piece = trim(body.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
      letters.push_back(parse_int(piece, static_cast<int>(j) + 1, "letter"));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  return Word(std::move(letters), *n, *k);
}

} // namespace spinal
