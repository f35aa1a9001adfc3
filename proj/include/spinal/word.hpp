#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spinal {

/// A word over the alphabet a_1..a_n, stored as letter indices (1-based).
/// `k` is the number of letters expected to occur three times.
class Word {
public:
  Word() = default;
  Word(std::vector<int> letters, int n, int k)
      : letters_(std::move(letters)), n_(n), k_(k) {}

  std::span<const int> letters() const noexcept { return letters_; }
  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  std::size_t size() const noexcept { return letters_.size(); }
  int operator[](std::size_t i) const { return letters_[i]; }

  /// Comma-separated indices, e.g. "3,1,2,1".
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

private:
  std::vector<int> letters_;
  int n_ = 0;
  int k_ = 0;
};

enum class WordClass { c1, c2 };

std::string_view to_string(WordClass cls);

/// Membership in C_{n,k}: length, multiplicities and prefix dominance.
bool in_class_c(const Word& w);
bool in_class_c1(const Word& w);
bool in_class_c2(const Word& w);
bool in_class(const Word& w, WordClass cls);

/// Human-readable description of the first violated membership condition,
/// or nullopt when the word is in the class.
std::optional<std::string> class_violation(const Word& w, WordClass cls);

/// The ~-representative whose first appearances of the twice-occurring
/// letters a_{k+1}..a_n come in increasing index order.
Word canonicalize_tilde(const Word& w, WordClass cls);

bool equivalent(const Word& a, const Word& b, WordClass cls);

/// Partition of {1..n+k} into k unordered pairs and n-k singletons.
struct PairPartition {
  int n = 0;
  int k = 0;
  std::vector<std::pair<int, int>> pairs; // each (min, max)
  std::vector<int> singletons;

  /// Sorted pairs and singletons; throws MalformedPartitionError when the
  /// blocks do not partition {1..n+k} as required.
  PairPartition normalized() const;

  friend bool operator==(const PairPartition&, const PairPartition&) = default;
};

Word partition_to_word_c1(const PairPartition& p);
PairPartition word_to_partition_c1(const Word& w);

// ---------------------------------------------------------------------------
// {L,R,Q} spine words

struct LrqToken {
  enum class Kind { L, R, Q };
  Kind kind = Kind::L;
  int index = 0; // 0 for L, otherwise 1..k

  friend bool operator==(const LrqToken&, const LrqToken&) = default;
};

struct LrqWord {
  std::vector<LrqToken> tokens;
  int n = 0; // leaves of the encoded network
  int k = 0;

  /// Space-separated tokens, e.g. "L R1 L Q1".
  std::string to_string() const;

  friend bool operator==(const LrqWord&, const LrqWord&) = default;
};

/// Parses "L R1 L R2 ..."; n and k are inferred from the token counts.
LrqWord parse_lrq(std::string_view text);

/// Throws MalformedLrqError unless the token sequence can be read off an
/// unlabeled spinal tree-child network.
void check_lrq(const LrqWord& u);

/// Intermediate results of transform_t, kept for inspection.
struct TransformSteps {
  std::vector<int> substituted; ///< step 1; 0 marks an L not yet replaced
  std::vector<int> lettered;    ///< step 2
  std::vector<int> reversed;    ///< step 3
  Word result;                  ///< step 4
};

TransformSteps transform_t_steps(const LrqWord& u);
Word transform_t(const LrqWord& u);

// ---------------------------------------------------------------------------
// text formats

/// "n=4 k=2" header line followed by the comma-separated letters.
std::string format_word_text(const Word& w);
Word parse_word_text(std::string_view text);

} // namespace spinal
