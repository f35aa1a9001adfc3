#include "spinal/verify.hpp"

#include "spinal/codec.hpp"
#include "spinal/errors.hpp"
#include "spinal/marked_tree.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

namespace spinal {

std::string_view to_string(CheckStatus s) {
  switch (s) {
  case CheckStatus::pass: return "PASS";
  case CheckStatus::fail: return "FAIL";
  case CheckStatus::skipped: return "SKIP";
  }
  return "?";
}

std::size_t VerifyReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [s](const CheckResult& r) { return r.status == s; }));
}

std::string VerifyReport::to_string() const {
  std::string out;
  for (const auto& r : results) {
    out += std::string(spinal::to_string(r.status)) + " " + r.identity + " " + r.params;
    if (!r.detail.empty()) out += ": " + r.detail;
    out += '\n';
  }
  return out;
}

namespace {

double now_seconds() {
  return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch()).count();
}

} // namespace

VerifySession::VerifySession(VerifyOptions options) : options_(std::move(options)), start_(now_seconds()) {}

bool VerifySession::out_of_time() const { return now_seconds() - start_ > options_.budget.time_limit; }

const OracleResult& VerifySession::oracle(int n, int k, bool labeled) {
  const auto key = std::make_tuple(n, k, labeled);
  auto it = oracle_.find(key);
  if (it == oracle_.end()) {
    EnumerationBudget b = oracle_budget();
    b.max_n = std::min(b.max_n, options_.budget.max_n);
    b.max_k = std::min(b.max_k, options_.budget.max_k);
    it = oracle_.emplace(key, brute_force_oracle(n, k, labeled, b)).first;
  }
  return it->second;
}

namespace {

using Check = std::optional<std::string>;

std::string cell(int n, int k) { return "n=" + std::to_string(n) + " k=" + std::to_string(k); }

std::string str(const BigInt& v) { return v.str(); }

Check expect_equal(const BigInt& got, const BigInt& want, const std::string& what) {
  if (got == want) return std::nullopt;
  return what + ": " + str(got) + " != " + str(want);
}

struct Cell {
  int n;
  int k;
};

std::vector<Cell> triangle(int n_lo, int n_hi, int k_hi_cap, int k_offset) {
  // 0 <= k <= min(k_hi_cap, n - k_offset)
  std::vector<Cell> out;
  for (int n = n_lo; n <= n_hi; ++n) {
    for (int k = 0; k <= std::min(k_hi_cap, n - k_offset); ++k) out.push_back({n, k});
  }
  return out;
}

// All cells folded into one result; the first mismatch is reported.
CheckResult fold(const std::string& name, const std::string& params, const std::vector<Cell>& cells,
                 const std::function<Check(int, int)>& check) {
  for (const auto& c : cells) {
    if (auto bad = check(c.n, c.k)) return {name, params, CheckStatus::fail, cell(c.n, c.k) + ": " + *bad};
  }
  return {name, params, CheckStatus::pass, ""};
}

// One result per cell; budget overruns become skips.
std::vector<CheckResult> per_cell(VerifySession& session, const std::string& name, const std::vector<Cell>& cells,
                                  const std::function<Check(int, int)>& check) {
  std::vector<CheckResult> out;
  for (const auto& c : cells) {
    CheckResult r{name, cell(c.n, c.k), CheckStatus::pass, ""};
    if (session.out_of_time()) {
      r.status = CheckStatus::skipped;
      r.detail = "time budget exhausted";
    } else {
      try {
        if (auto bad = check(c.n, c.k)) {
          r.status = CheckStatus::fail;
          r.detail = *bad;
        }
      } catch (const BudgetExceededError& e) {
        r.status = CheckStatus::skipped;
        r.detail = e.what();
      } catch (const Error& e) {
        r.status = CheckStatus::fail;
        r.detail = std::string("error[") + e.code() + "]: " + e.what();
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

Check incomplete(const EnumerationStatus& st) {
  if (st.complete) return std::nullopt;
  throw BudgetExceededError("stream stopped by the object or time budget");
}

// A word in the same ~-class as w with the first appearances of the
// twice-occurring letters renamed in reverse order.
Word scramble_tilde(const Word& w) {
  std::vector<int> letters(w.letters().begin(), w.letters().end());
  const std::size_t prefix = letters.size() - static_cast<std::size_t>(w.n() - w.k());
  for (std::size_t p = 0; p < prefix; ++p) {
    if (letters[p] > w.k()) letters[p] = w.n() + w.k() + 1 - letters[p];
  }
  return Word(std::move(letters), w.n(), w.k());
}

Check codec_roundtrip(VerifySession& session, int n, int k, WordClass cls) {
  std::set<std::string> forms;
  std::optional<std::string> bad;
  std::uint64_t count = 0;
  auto check_word = [&](const Word& w) {
    ++count;
    const PhyloNetwork net = cls == WordClass::c1 ? decode_nlstc(w) : decode_nlsctc(w);
    const Word back = cls == WordClass::c1 ? encode_nlstc(net) : encode_nlsctc(net);
    if (back != w) {
      bad = "encode(decode(" + w.to_string() + ")) = " + back.to_string();
      return false;
    }
    const PhyloNetwork again = cls == WordClass::c1 ? decode_nlstc(back) : decode_nlsctc(back);
    if (!isomorphic(again, net)) {
      bad = "decode(encode(N)) is not isomorphic to N for " + w.to_string();
      return false;
    }
    const Word variant = scramble_tilde(w);
    const PhyloNetwork from_variant = cls == WordClass::c1 ? decode_nlstc(variant) : decode_nlsctc(variant);
    const Word canon = cls == WordClass::c1 ? encode_nlstc(from_variant) : encode_nlsctc(from_variant);
    if (canon != canonicalize_tilde(variant, cls)) {
      bad = "encode(decode(w')) != canonical(w') for w' = " + variant.to_string();
      return false;
    }
    if (!forms.insert(canonical_form(net)).second) {
      bad = "two words decode to isomorphic networks";
      return false;
    }
    return true;
  };
  EnumerationStatus st;
  if (cls == WordClass::c1) st = enumerate_c1_classes(n - 1, k, check_word, session.options().budget);
  else st = enumerate_c2_classes(n - 1, k, check_word, session.options().budget);
  if (bad) return bad;
  incomplete(st);
  const auto& counters = session.options().counters;
  return expect_equal(count, (cls == WordClass::c1 ? counters.nlstc : counters.nlsctc)(n, k).value, "network count");
}

std::vector<Identity> build_matrix() {
  std::vector<Identity> m;
  const auto small = triangle(2, 8, 100, 1); // 2 <= n <= 8, 0 <= k <= n-1

  m.push_back({"labeled_unlabeled", "labeled count from the unlabeled one", [small](VerifySession& s) {
                 const auto& c = s.options().counters;
                 return std::vector<CheckResult>{fold("labeled_unlabeled", "2<=n<=8 0<=k<=n-1", small, [&c](int n, int k) {
                   const BigInt f = factorial(n);
                   const BigInt lemma = f * c.nlstc(n, k).value - f / 2 * c.nlstc(n - 1, k).value;
                   return expect_equal(c.stc(n, k).value, lemma, "stc vs lemma");
                 })};
               }});
  m.push_back({"marked_labeled", "labeled count from marked trees", [small](VerifySession& s) {
                 const auto& c = s.options().counters;
                 return std::vector<CheckResult>{
                     fold("marked_labeled", "2<=n<=8 0<=k<=n-1", small, [&c](int n, int k) {
                       const BigInt rel = n * c.s(n - 1, k + 1).value / 2 + BigInt(n) * (n + k - 2) * c.s(n - 1, k).value;
                       return expect_equal(c.stc(n, k).value, rel, "stc vs marked-tree relation");
                     })};
               }});
  m.push_back({"marked_unlabeled", "unlabeled count from marked trees", [small](VerifySession& s) {
                 const auto& c = s.options().counters;
                 return std::vector<CheckResult>{
                     fold("marked_unlabeled", "2<=n<=8 0<=k<=n-1", small, [&c](int n, int k) {
                       const BigInt rel = c.d(n - 1, k + 1).value + BigInt(n + k - 2) * c.d(n - 1, k).value;
                       return expect_equal(c.nlstc(n, k).value, rel, "nlstc vs marked-tree relation");
                     })};
               }});
  m.push_back({"stc_forms", "both printed closed forms agree", [](VerifySession& s) {
                 const auto& c = s.options().counters;
                 return std::vector<CheckResult>{
                     fold("stc_forms", "2<=n<=20 0<=k<=n-1", triangle(2, 20, 100, 1), [&c](int n, int k) {
                       return expect_equal(c.stc(n, k).value, count_stc_factored_out(n, k).value, "stc forms");
                     })};
               }});
  m.push_back({"nlsctc_c2", "caterpillar networks vs C^2 classes", [small](VerifySession& s) {
                 const auto& c = s.options().counters;
                 return std::vector<CheckResult>{fold("nlsctc_c2", "2<=n<=8 0<=k<=n-1", small, [&c](int n, int k) {
                   return expect_equal(c.nlsctc(n, k).value, c.c2(n - 1, k).value, "nlsctc vs c2");
                 })};
               }});
  m.push_back({"s_d_ratio", "s = n! d", [](VerifySession& s) {
                 const auto& c = s.options().counters;
                 std::vector<Cell> cells;
                 for (int n = 1; n <= 8; ++n) {
                   for (int k = 1; k <= n; ++k) cells.push_back({n, k});
                 }
                 return std::vector<CheckResult>{fold("s_d_ratio", "1<=k<=n<=8", cells, [&c](int n, int k) {
                   return expect_equal(c.s(n, k).value, factorial(n) * c.d(n, k).value, "s vs n! d");
                 })};
               }});
  m.push_back({"monotone", "counts grow with n", [](VerifySession& s) {
                 const auto& c = s.options().counters;
                 std::vector<Cell> cells;
                 for (int k = 0; k <= 6; ++k) {
                   for (int n = k + 2; n <= 12; ++n) cells.push_back({n, k});
                 }
                 return std::vector<CheckResult>{fold("monotone", "k<=6 k+2<=n<=12", cells, [&c](int n, int k) -> Check {
                   for (const auto* f : {&c.stc, &c.nlstc, &c.nlsctc}) {
                     if ((*f)(n, k).value < (*f)(n - 1, k).value) return "count decreases from n-1 to n";
                   }
                   return std::nullopt;
                 })};
               }});
  m.push_back({"series_s", "coefficients of the closed form", [](VerifySession& s) {
                 const auto& c = s.options().counters;
                 const SeriesTable t = series_expand_s(8, 8);
                 std::vector<Cell> cells;
                 for (int n = 0; n <= 8; ++n) {
                   for (int k = 0; k <= 8; ++k) cells.push_back({n, k});
                 }
                 return std::vector<CheckResult>{fold("series_s", "0<=n<=8 0<=k<=8", cells, [&](int n, int k) -> Check {
                   const Rational want(c.s(n, k).value, factorial(n) * factorial(k));
                   if (t.at(n, k) == want) return std::nullopt;
                   return "series coefficient " + t.at(n, k).str() + " != " + want.str();
                 })};
               }});
  m.push_back({"series_k1_row", "derivative rows of the closed form", [](VerifySession&) {
                 const SeriesTable t = series_expand_s(8, 8);
                 std::vector<Cell> cells;
                 for (int n = 0; n <= 8; ++n) {
                   for (int k = 1; k <= 8; ++k) cells.push_back({n, k});
                 }
                 return std::vector<CheckResult>{
                     fold("series_k1_row", "0<=n<=8 1<=k<=8", cells, [&t](int n, int k) -> Check {
                       if (k == 1 && t.at(n, 1) != (n >= 1 ? 1 : 0)) return "row k=1 is not x/(1-x)";
                       const Rational got = t.at(n, k) * factorial(k);
                       const Rational want(double_factorial_odd(k - 1) * binomial(n + k - 2, 2 * k - 2));
                       if (n >= k && got != want) return "k! [x^n z^k] S = " + got.str() + ", expected " + want.str();
                       if (n < k && got != 0) return "nonzero coefficient below the diagonal";
                       return std::nullopt;
                     })};
               }});
  m.push_back({"ode_residual", "dS/dz (1-x-S) = x", [](VerifySession&) {
                 const bool ok = check_ode_residual(8, 8);
                 return std::vector<CheckResult>{
                     {"ode_residual", "N=8 K=8", ok ? CheckStatus::pass : CheckStatus::fail, ok ? "" : "residual nonzero"}};
               }});
  m.push_back({"four_way", "formula, lemma, marked trees and series agree", [small](VerifySession& s) {
                 const auto& c = s.options().counters;
                 const SeriesTable t = series_expand_s(8, 8);
                 auto series_s = [&t](int n, int k) {
                   if (n < 0 || k < 0 || n > 8 || k > 8) return BigInt(0);
                   const Rational v = t.at(n, k) * factorial(n) * factorial(k);
                   return numerator(v);
                 };
                 return std::vector<CheckResult>{fold("four_way", "2<=n<=8 0<=k<=n-1", small, [&](int n, int k) -> Check {
                   const BigInt stc = c.stc(n, k).value;
                   const BigInt f = factorial(n);
                   const BigInt lemma = f * c.nlstc(n, k).value - f / 2 * c.nlstc(n - 1, k).value;
                   const BigInt series = n * series_s(n - 1, k + 1) / 2 + BigInt(n) * (n + k - 2) * series_s(n - 1, k);
                   for (const auto& [v, what] : {std::pair{lemma, "lemma"}, std::pair{count_stc_via_marked(n, k).value, "marked"},
                                                 std::pair{series, "series"}}) {
                     if (v != stc) return std::string("stc ") + str(stc) + " != " + what + " " + str(v);
                   }
                   const BigInt nl = c.nlstc(n, k).value;
                   auto series_d = [&](int a, int b) { return series_s(a, b) / factorial(a); };
                   const BigInt nl_series = series_d(n - 1, k + 1) + BigInt(n + k - 2) * series_d(n - 1, k);
                   for (const auto& [v, what] : {std::pair{count_nlstc_via_marked(n, k).value, "marked"},
                                                 std::pair{count_bessel(n - 1, k).value, "bessel"},
                                                 std::pair{nl_series, "series"}}) {
                     if (v != nl) return std::string("nlstc ") + str(nl) + " != " + what + " " + str(v);
                   }
                   return std::nullopt;
                 })};
               }});

  // enumeration-backed identities

  m.push_back({"pair_partitions", "partition stream size", [](VerifySession& s) {
                 return per_cell(s, "pair_partitions", triangle(0, 7, 4, 0), [&s](int n, int k) -> Check {
                   std::set<std::pair<std::vector<std::pair<int, int>>, std::vector<int>>> seen;
                   const auto st = enumerate_pair_partitions(n, k, [&](const PairPartition& p) {
                     seen.insert({p.pairs, p.singletons});
                     return true;
                   }, s.options().budget);
                   incomplete(st);
                   if (seen.size() != st.emitted) return "repeated partition";
                   return expect_equal(st.emitted, count_bessel(n, k).value, "partitions");
                 });
               }});
  m.push_back({"c1_enum", "C^1 class stream size", [](VerifySession& s) {
                 return per_cell(s, "c1_enum", triangle(0, 7, 4, 0), [&s](int n, int k) -> Check {
                   std::set<Word> seen;
                   Check bad;
                   const auto st = enumerate_c1_classes(n, k, [&](const Word& w) {
                     if (!in_class_c1(w) || canonicalize_tilde(w, WordClass::c1) != w) bad = "non-canonical word " + w.to_string();
                     seen.insert(w);
                     return !bad;
                   }, s.options().budget);
                   if (bad) return bad;
                   incomplete(st);
                   if (seen.size() != st.emitted) return "repeated word";
                   return expect_equal(st.emitted, s.options().counters.c1(n, k).value, "c1 classes");
                 });
               }});
  m.push_back({"c2_enum", "C^2 class stream size", [](VerifySession& s) {
                 return per_cell(s, "c2_enum", triangle(0, 6, 3, 0), [&s](int n, int k) -> Check {
                   std::set<Word> seen;
                   Check bad;
                   const auto st = enumerate_c2_classes(n, k, [&](const Word& w) {
                     if (!in_class_c2(w) || canonicalize_tilde(w, WordClass::c2) != w) bad = "non-canonical word " + w.to_string();
                     seen.insert(w);
                     return !bad;
                   }, s.options().budget);
                   if (bad) return bad;
                   incomplete(st);
                   if (seen.size() != st.emitted) return "repeated word";
                   enumerate_c1_classes(n, k, [&](const Word& w) {
                     if (!seen.count(w)) bad = "C^1 word " + w.to_string() + " missing";
                     return !bad;
                   }, s.options().budget);
                   if (bad) return bad;
                   return expect_equal(st.emitted, s.options().counters.c2(n, k).value, "c2 classes");
                 });
               }});
  m.push_back({"marked_enum", "marked-tree stream sizes", [](VerifySession& s) {
                 std::vector<Cell> cells;
                 for (int n = 1; n <= 5; ++n) {
                   for (int k = 1; k <= std::min(n, 4); ++k) cells.push_back({n, k});
                 }
                 return per_cell(s, "marked_enum", cells, [&s](int n, int k) -> Check {
                   for (bool labeled : {false, true}) {
                     const auto st = enumerate_marked_trees(n, k, labeled, [](const MarkedTree& mt) {
                       check_marked_tree(mt);
                       return true;
                     }, s.options().budget);
                     incomplete(st);
                     const auto& c = s.options().counters;
                     if (auto bad = expect_equal(st.emitted, (labeled ? c.s : c.d)(n, k).value,
                                                 labeled ? "labeled marked trees" : "unlabeled marked trees")) {
                       return bad;
                     }
                   }
                   return std::nullopt;
                 });
               }});
  m.push_back({"codec_c1", "C^1 codec roundtrips", [](VerifySession& s) {
                 return per_cell(s, "codec_c1", triangle(1, 6, 3, 1),
                                 [&s](int n, int k) { return codec_roundtrip(s, n, k, WordClass::c1); });
               }});
  m.push_back({"codec_c2", "C^2 codec roundtrips", [](VerifySession& s) {
                 return per_cell(s, "codec_c2", triangle(1, 5, 2, 1),
                                 [&s](int n, int k) { return codec_roundtrip(s, n, k, WordClass::c2); });
               }});
  m.push_back({"lrq_cross", "T(lrq(N)) = encode(N)", [](VerifySession& s) {
                 return per_cell(s, "lrq_cross", triangle(1, 6, 3, 1), [&s](int n, int k) -> Check {
                   Check bad;
                   const auto st = enumerate_nlstc(n, k, [&](const PhyloNetwork& net) {
                     const Word a = transform_t(lrq_encode(net));
                     const Word b = encode_nlstc(net);
                     if (a != b) bad = "T gives " + a.to_string() + ", codec gives " + b.to_string();
                     return !bad;
                   }, s.options().budget);
                   if (bad) return bad;
                   incomplete(st);
                   return std::nullopt;
                 });
               }});
  m.push_back({"stc_enum", "labeled stream size", [](VerifySession& s) {
                 return per_cell(s, "stc_enum", triangle(2, 5, 3, 1), [&s](int n, int k) -> Check {
                   DedupStats stats;
                   std::set<std::string> forms;
                   const auto st = enumerate_stc(n, k, [&](const PhyloNetwork& net) {
                     forms.insert(canonical_form(net));
                     return true;
                   }, s.options().budget, &stats);
                   incomplete(st);
                   if (forms.size() != st.emitted) return "repeated network";
                   if (stats.duplicates != stats.cherry) return "cherry networks did not arise exactly twice";
                   return expect_equal(st.emitted, s.options().counters.stc(n, k).value, "stc stream");
                 });
               }});
  m.push_back({"oracle_unlabeled", "oracle vs unlabeled formula", [](VerifySession& s) {
                 return per_cell(s, "oracle_unlabeled", triangle(2, 5, 3, 1), [&s](int n, int k) {
                   return expect_equal(s.oracle(n, k, false).count.value, s.options().counters.nlstc(n, k).value,
                                       "oracle vs nlstc");
                 });
               }});
  m.push_back({"oracle_labeled", "oracle vs labeled formula", [](VerifySession& s) {
                 return per_cell(s, "oracle_labeled", triangle(2, 5, 3, 1), [&s](int n, int k) {
                   return expect_equal(s.oracle(n, k, true).count.value, s.options().counters.stc(n, k).value,
                                       "oracle vs stc");
                 });
               }});
  m.push_back({"oracle_bijection", "oracle and generated networks match one to one", [](VerifySession& s) {
                 return per_cell(s, "oracle_bijection", triangle(2, 4, 3, 1), [&s](int n, int k) -> Check {
                   std::multiset<std::string> oracle_forms;
                   for (const auto& net : s.oracle(n, k, false).networks) oracle_forms.insert(canonical_form(net));
                   std::multiset<std::string> codec_forms;
                   incomplete(enumerate_nlstc(n, k, [&](const PhyloNetwork& net) {
                     codec_forms.insert(canonical_form(net));
                     return true;
                   }, s.options().budget));
                   if (oracle_forms != codec_forms) return "unlabeled oracle and codec networks differ";
                   std::multiset<std::string> labeled_oracle;
                   for (const auto& net : s.oracle(n, k, true).networks) labeled_oracle.insert(canonical_form(net));
                   std::multiset<std::string> labeled_stream;
                   incomplete(enumerate_stc(n, k, [&](const PhyloNetwork& net) {
                     labeled_stream.insert(canonical_form(net));
                     return true;
                   }, s.options().budget));
                   if (labeled_oracle != labeled_stream) return "labeled oracle and marked-tree networks differ";
                   return std::nullopt;
                 });
               }});
  m.push_back({"spine_lemma", "t = n+k-1 and l = n+2k on oracle networks", [](VerifySession& s) {
                 return per_cell(s, "spine_lemma", triangle(1, 5, 3, 1), [&s](int n, int k) -> Check {
                   for (const auto& net : s.oracle(n, k, false).networks) {
                     const auto spines = find_spines(net);
                     for (const auto& sp : spines) {
                       const auto m = spine_metrics(net, sp);
                       if (m.tree_vertices != n + k - 1 || m.spine_length != n + 2 * k) {
                         return "t=" + std::to_string(m.tree_vertices) + " l=" + std::to_string(m.spine_length);
                       }
                       const auto arcs = static_cast<int>(net.arcs().size());
                       if (arcs != 1 + 2 * m.tree_vertices + k || arcs != m.tree_vertices + 2 * k + n) {
                         return "arc count " + std::to_string(arcs);
                       }
                       const bool cherry = classify_terminal(net, sp) == TerminalShape::cherry;
                       if (n >= 2 && (spines.size() == 2) != cherry) return "spine count does not match the terminal shape";
                     }
                   }
                   return std::nullopt;
                 });
               }});
  m.push_back({"cherry_fibration", "cherry networks vs marked trees", [](VerifySession& s) {
                 return per_cell(s, "cherry_fibration", triangle(2, 4, 3, 1), [&s](int n, int k) -> Check {
                   BigInt cherry = 0;
                   for (const auto& net : s.oracle(n, k, true).networks) {
                     const auto spines = find_spines(net);
                     if (classify_terminal(net, spines.front()) != TerminalShape::cherry) continue;
                     ++cherry;
                     for (const auto& sp : spines) {
                       const MarkedTree mt = network_to_marked_tree(net, sp);
                       const int removed = *net.vertex(sp.terminal()).label;
                       if (!isomorphic(marked_tree_to_network(mt, removed), net)) return "marked-tree roundtrip failed";
                     }
                   }
                   BigInt trees = 0;
                   for (int j = 1; j <= n; ++j) {
                     std::vector<int> labels;
                     for (int i = 1; i <= n; ++i) {
                       if (i != j) labels.push_back(i);
                     }
                     const auto st = enumerate_marked_trees_on(labels, k + 1, [](const MarkedTree&) { return true; },
                                                               s.options().budget);
                     incomplete(st);
                     trees += st.emitted;
                   }
                   return expect_equal(2 * cherry, trees, "2 |cherry| vs sum of marked trees");
                 });
               }});
  m.push_back({"nc_relation", "non-cherry networks vs cherry networks with one reticulation fewer", [](VerifySession& s) {
                 std::vector<Cell> cells;
                 for (int n = 2; n <= 4; ++n) {
                   for (int k = 1; k <= n - 1; ++k) cells.push_back({n, k});
                 }
                 return per_cell(s, "nc_relation", cells, [&s](int n, int k) -> Check {
                   auto split = [&s, n](int kk) {
                     std::pair<BigInt, BigInt> c{0, 0};
                     for (const auto& net : s.oracle(n, kk, true).networks) {
                       const bool cherry = classify_terminal(net, find_spines(net).front()) == TerminalShape::cherry;
                       (cherry ? c.first : c.second) += 1;
                     }
                     return c;
                   };
                   for (const auto& net : s.oracle(n, k, true).networks) {
                     if (classify_terminal(net, find_spines(net).front()) != TerminalShape::non_cherry) continue;
                     const auto [base, choice] = non_cherry_to_cherry(net);
                     if (!isomorphic(cherry_to_non_cherry(base, choice.cherry_arc, choice.tree_node), net)) {
                       return "cherry/non-cherry roundtrip failed";
                     }
                   }
                   return expect_equal(split(k).second, BigInt(2 * (n + k - 2)) * split(k - 1).first, "non-cherry count");
                 });
               }});
  return m;
}

} // namespace

const std::vector<Identity>& identity_matrix() {
  static const std::vector<Identity> matrix = build_matrix();
  return matrix;
}

VerifyReport run_verification(const VerifyOptions& options) {
  const auto& matrix = identity_matrix();
  if (options.only && std::none_of(matrix.begin(), matrix.end(), [&](const Identity& i) { return i.name == *options.only; })) {
    throw RangeError("unknown identity '" + *options.only + "'");
  }
  VerifySession session(options);
  VerifyReport report;
  for (const auto& id : matrix) {
    if (options.only && id.name != *options.only) continue;
    auto results = id.run(session);
    report.results.insert(report.results.end(), results.begin(), results.end());
  }
  return report;
}

} // namespace spinal
