#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kdecomp/abelian.hpp"

namespace kdecomp {

// Operator letters acting on K-groups: identity, the two Nil operators
// (positive and negative Laurent direction), and the loop/contraction
// operator that lowers degree by one.
enum class OpLetter : unsigned char { I, NPlus, NMinus, L };

// Noncommuting word over the operator alphabet.  The word's value under
// evaluation depends only on its letter counts; the word itself is kept as
// provenance for summand bookkeeping.
using OpWord = std::vector<OpLetter>;

std::string letter_to_string(OpLetter l);
std::string word_to_string(const OpWord& w);  // "1" for the empty word
Int count_nil_letters(const OpWord& w);
Int count_loop_letters(const OpWord& w);

// Formal sum of words with nonnegative multiplicities.
struct OpPolynomial {
  std::map<OpWord, Int> terms;

  Int total_multiplicity() const;
};

// Alphabets of the power expansions used by the fundamental theorem
// bookkeeping.
enum class PowerBase {
  laurent,   // {I, N+, N-, L}: one Laurent extension
  poly,      // {I, N+}:        one polynomial extension
  free_part, // {I, L}:         the Nil-free part
  nil_only   // {N+, N-}:       the pure Nil part
};

const std::vector<OpLetter>& alphabet(PowerBase base);

// All words of length n over the base alphabet, each with multiplicity 1
// (the expansion of the n-th power of the letter sum).
OpPolynomial expand_power(PowerBase base, Int n);
// The same words as an ordered list (lexicographic in letter order).
std::vector<OpWord> words_over(PowerBase base, Int n);
// Words of length n over {I, L} with exactly i L letters.
std::vector<OpWord> free_words_with_loops(Int n, Int loops);

// Graded symbol: K_j, the m-fold iterated Nil symbol N^m K_j, or a twisted
// Nil symbol for a ring automorphism and its inverse.
struct GradedSymbol {
  enum class Kind { K, Nil, TwistedNilAlpha, TwistedNilAlphaInv };

  Kind kind = Kind::K;
  Int power = 0;  // m >= 1 for Kind::Nil, 0 otherwise
  Int degree = 0;

  static GradedSymbol k(Int degree) { return {Kind::K, 0, degree}; }
  static GradedSymbol nil(Int power, Int degree) { return {Kind::Nil, power, degree}; }
  static GradedSymbol twisted(bool inverse, Int degree) {
    return {inverse ? Kind::TwistedNilAlphaInv : Kind::TwistedNilAlpha, 0, degree};
  }

  bool operator==(const GradedSymbol&) const = default;
  bool operator<(const GradedSymbol& o) const;

  std::string to_string() const;                   // absolute degree: "K_0", "N^2K_-1"
  std::string to_string_relative(Int q) const;     // "K[q]", "NK[q-1]", "N^2K[q]"
};

// Value of a word applied to K_q: with a = #N-letters and b = #L-letters,
// a = 0 gives K_{q-b} and a >= 1 gives N^a K_{q-b}.  Letter order never
// matters for the value (N and L commute through K), only for provenance.
GradedSymbol word_value(const OpWord& w, Int q);

// Finitely supported multiset of graded symbols, with concrete groups
// attached for the symbols a ring table resolves.
struct FormalGradedGroup {
  std::map<GradedSymbol, Int> multiplicity;
  std::map<GradedSymbol, FGAbelianGroup> resolved;

  void add(const GradedSymbol& s, Int count);
  bool operator==(const FormalGradedGroup& o) const {
    return multiplicity == o.multiplicity && resolved == o.resolved;
  }
};

// Ring table: partial assignment of K_j and NK_j to concrete groups, formal
// symbols, or zero.  A regular table forces every NK entry to zero.
enum class EntryKind { zero, symbol, concrete };

struct TableEntry {
  EntryKind kind = EntryKind::symbol;
  std::optional<FGAbelianGroup> group;  // set iff kind == concrete

  static TableEntry zero() { return {EntryKind::zero, std::nullopt}; }
  static TableEntry symbol() { return {EntryKind::symbol, std::nullopt}; }
  static TableEntry concrete(FGAbelianGroup g);

  bool is_zero() const { return kind == EntryKind::zero; }
  bool operator==(const TableEntry&) const = default;
};

class RingTable {
 public:
  // With defaults_to_symbol, unspecified degrees read as formal symbols (the
  // file-format convention); otherwise they are genuinely missing, which the
  // vanishing checks report as insufficient information.
  RingTable(std::string name, bool regular, bool defaults_to_symbol = false)
      : name_(std::move(name)), regular_(regular), defaults_to_symbol_(defaults_to_symbol) {}

  // The two canonical regimes: everything a symbol / all Nil groups zero.
  static RingTable symbolic();
  static RingTable regular_ring();

  const std::string& name() const { return name_; }
  bool regular() const { return regular_; }

  void set_k(Int degree, TableEntry entry);
  void set_nk(Int degree, TableEntry entry);  // rejects nonzero entries on regular tables

  // nullopt means the degree is unspecified.  On regular tables NK entries
  // are always zero.
  std::optional<TableEntry> k_entry(Int degree) const;
  std::optional<TableEntry> nk_entry(Int degree) const;

  // Zero / nonzero classification used by vanishing arguments: an entry is
  // known-zero when it is explicitly zero or a concrete trivial group.
  bool nk_known_zero(Int degree) const;
  bool nk_specified(Int degree) const;

 private:
  std::string name_;
  bool regular_;
  bool defaults_to_symbol_;
  std::map<Int, TableEntry> k_, nk_;
};

// Result of evaluating an operator polynomial against a ring table.
struct Evaluation {
  FormalGradedGroup value;
  bool conjectural = false;  // an iterated-Nil rewrite was applied
  bool truncated = false;    // the rewrite enumerated subgroups up to a height
};

// Sum word_value over the polynomial and resolve against the table.  Zero
// entries delete summands.  N^m K with m >= 2 resolves to zero whenever the
// m consecutive NK entries below its degree are all zero (this direction is
// unconditional); otherwise, with assume_conjecture set, it is rewritten as
// the sum over all-positive maximal cyclic subgroups of Z^m (truncated at
// `height`) of binomial(m-1, i) copies of NK_{degree-i}.
Evaluation evaluate(const OpPolynomial& p, Int q, const RingTable& table, bool assume_conjecture,
                    std::optional<Int> height);

// Exactness report for the four-term contracted-functor sequence
//   0 -> K(R) -> K(R[t]) + K(R[1/t]) -> K(R[t,1/t]) -> LK(R) -> 0
// built from concrete K_q, K_{q-1}, NK_q table entries, with
// K(R[t]) = K_q + NK_q and K(R[t,1/t]) = K_q + 2 NK_q + K_{q-1}.
struct FourTermReport {
  std::vector<std::string> spot_names;
  std::vector<FGAbelianGroup> homology;
  bool exact = false;
  bool splitting_verified = false;  // section of the LK surjection composes to the identity
};

struct FourTermOptions {
  // Negative control: drop the N+ component of the middle difference map.
  bool zero_middle_nil_block = false;
};

FourTermReport four_term_check(Int q, const RingTable& table, FourTermOptions options = {});

// The two graded pieces of the Wang sequence of an automorphism family:
// coker(1 - alpha) in degree q and ker(1 - alpha) in degree q-1.  The
// extension assembling them into the mapping-torus group is not determined
// by this data.
struct WangPieces {
  FGAbelianGroup cokernel_piece;  // at degree q
  FGAbelianGroup kernel_piece;    // at degree q-1
  bool extension_determined = false;
};

WangPieces wang_pieces(const Homomorphism& alpha_at_q, const Homomorphism& alpha_below_q);

}  // namespace kdecomp
