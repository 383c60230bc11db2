#include "kdecomp/contracted.hpp"

#include <algorithm>
#include <sstream>

#include "kdecomp/lattice.hpp"

namespace kdecomp {

std::string letter_to_string(OpLetter l) {
  switch (l) {
    case OpLetter::I: return "I";
    case OpLetter::NPlus: return "N+";
    case OpLetter::NMinus: return "N-";
    case OpLetter::L: return "L";
  }
  return "?";
}

std::string word_to_string(const OpWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (OpLetter l : w) s += letter_to_string(l);
  return s;
}

Int count_nil_letters(const OpWord& w) {
  return static_cast<Int>(std::count_if(w.begin(), w.end(), [](OpLetter l) {
    return l == OpLetter::NPlus || l == OpLetter::NMinus;
  }));
}

Int count_loop_letters(const OpWord& w) {
  return static_cast<Int>(std::count(w.begin(), w.end(), OpLetter::L));
}

Int OpPolynomial::total_multiplicity() const {
  Int total = 0;
  for (auto& [w, m] : terms) total = checked_add(total, m);
  return total;
}

const std::vector<OpLetter>& alphabet(PowerBase base) {
  static const std::vector<OpLetter> laurent{OpLetter::I, OpLetter::NPlus, OpLetter::NMinus,
                                             OpLetter::L};
  static const std::vector<OpLetter> poly{OpLetter::I, OpLetter::NPlus};
  static const std::vector<OpLetter> free_part{OpLetter::I, OpLetter::L};
  static const std::vector<OpLetter> nil_only{OpLetter::NPlus, OpLetter::NMinus};
  switch (base) {
    case PowerBase::laurent: return laurent;
    case PowerBase::poly: return poly;
    case PowerBase::free_part: return free_part;
    case PowerBase::nil_only: return nil_only;
  }
  return laurent;
}

std::vector<OpWord> words_over(PowerBase base, Int n) {
  if (n < 0) throw DomainError("power expansion requires n >= 0");
  const auto& letters = alphabet(base);
  std::vector<OpWord> out;
  OpWord current;
  // Odometer in alphabet order gives lexicographic output.
  std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
  for (;;) {
    OpWord w(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) w[i] = letters[idx[i]];
    out.push_back(std::move(w));
    std::size_t i = idx.size();
    while (i > 0) {
      --i;
      if (++idx[i] < letters.size()) break;
      idx[i] = 0;
      if (i == 0) return out;
    }
    if (idx.empty()) return out;
  }
}

OpPolynomial expand_power(PowerBase base, Int n) {
  OpPolynomial p;
  for (auto& w : words_over(base, n)) p.terms[w] = 1;
  return p;
}

std::vector<OpWord> free_words_with_loops(Int n, Int loops) {
  std::vector<OpWord> out;
  for (auto& w : words_over(PowerBase::free_part, n))
    if (count_loop_letters(w) == loops) out.push_back(w);
  return out;
}

bool GradedSymbol::operator<(const GradedSymbol& o) const {
  if (kind != o.kind) return kind < o.kind;
  if (power != o.power) return power < o.power;
  return degree > o.degree;  // higher degree first: K_q before K_{q-1}
}

std::string GradedSymbol::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::K: os << "K_" << degree; break;
    case Kind::Nil:
      if (power == 1)
        os << "NK_" << degree;
      else
        os << "N^" << power << "K_" << degree;
      break;
    case Kind::TwistedNilAlpha: os << "NK_" << degree << "(a)"; break;
    case Kind::TwistedNilAlphaInv: os << "NK_" << degree << "(a^-1)"; break;
  }
  return os.str();
}

std::string GradedSymbol::to_string_relative(Int q) const {
  std::ostringstream os;
  switch (kind) {
    case Kind::K: os << "K"; break;
    case Kind::Nil:
      if (power == 1)
        os << "NK";
      else
        os << "N^" << power << "K";
      break;
    case Kind::TwistedNilAlpha: os << "NK(a)"; break;
    case Kind::TwistedNilAlphaInv: os << "NK(a^-1)"; break;
  }
  os << "[q";
  Int drop = q - degree;
  if (drop > 0) os << "-" << drop;
  if (drop < 0) os << "+" << -drop;
  os << "]";
  return os.str();
}

GradedSymbol word_value(const OpWord& w, Int q) {
  Int a = count_nil_letters(w);
  Int b = count_loop_letters(w);
  Int degree = checked_sub(q, b);
  return a == 0 ? GradedSymbol::k(degree) : GradedSymbol::nil(a, degree);
}

void FormalGradedGroup::add(const GradedSymbol& s, Int count) {
  if (count == 0) return;
  multiplicity[s] = checked_add(multiplicity[s], count);
}

TableEntry TableEntry::concrete(FGAbelianGroup g) {
  g.validate();
  return {EntryKind::concrete, std::move(g)};
}

RingTable RingTable::symbolic() { return RingTable("symbolic", false, true); }

RingTable RingTable::regular_ring() { return RingTable("regular", true, true); }

void RingTable::set_k(Int degree, TableEntry entry) { k_[degree] = std::move(entry); }

void RingTable::set_nk(Int degree, TableEntry entry) {
  bool zero = entry.is_zero() || (entry.kind == EntryKind::concrete && entry.group->is_trivial());
  if (regular_ && !zero)
    throw DomainError("regular table cannot carry a nonzero NK entry at degree " +
                      std::to_string(degree));
  nk_[degree] = std::move(entry);
}

std::optional<TableEntry> RingTable::k_entry(Int degree) const {
  auto it = k_.find(degree);
  if (it == k_.end())
    return defaults_to_symbol_ ? std::optional<TableEntry>(TableEntry::symbol()) : std::nullopt;
  return it->second;
}

std::optional<TableEntry> RingTable::nk_entry(Int degree) const {
  if (regular_) return TableEntry::zero();
  auto it = nk_.find(degree);
  if (it == nk_.end())
    return defaults_to_symbol_ ? std::optional<TableEntry>(TableEntry::symbol()) : std::nullopt;
  return it->second;
}

bool RingTable::nk_known_zero(Int degree) const {
  auto e = nk_entry(degree);
  if (!e) return false;
  return e->is_zero() || (e->kind == EntryKind::concrete && e->group->is_trivial());
}

bool RingTable::nk_specified(Int degree) const {
  return regular_ || defaults_to_symbol_ || nk_.count(degree) > 0;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

// Resolve a K or NK symbol against the table.  Returns false when the entry
// is zero (the summand disappears).
bool resolve_symbol(const GradedSymbol& s, const RingTable& table, FormalGradedGroup& out,
                    Int count) {
  std::optional<TableEntry> entry;
  if (s.kind == GradedSymbol::Kind::K)
    entry = table.k_entry(s.degree);
  else if (s.kind == GradedSymbol::Kind::Nil && s.power == 1)
    entry = table.nk_entry(s.degree);
  if (entry && entry->is_zero()) return false;
  out.add(s, count);
  if (entry && entry->kind == EntryKind::concrete) out.resolved[s] = *entry->group;
  return true;
}

}  // namespace

Evaluation evaluate(const OpPolynomial& p, Int q, const RingTable& table, bool assume_conjecture,
                    std::optional<Int> height) {
  if (assume_conjecture && !height)
    throw DomainError("iterated-Nil rewrite requires a height bound");
  if (assume_conjecture && *height < 1) throw DomainError("height must be >= 1");
  Evaluation result;
  for (auto& [word, count] : p.terms) {
    GradedSymbol s = word_value(word, q);
    if (s.kind == GradedSymbol::Kind::Nil && s.power >= 2) {
      Int m = s.power;
      // Vanishing is a theorem: N^m K_j dies when NK_j, ..., NK_{j-m+1} are
      // all zero.
      bool all_zero = true;
      for (Int i = 0; i < m; ++i)
        if (!table.nk_known_zero(s.degree - i)) {
          all_zero = false;
          break;
        }
      if (all_zero) continue;
      if (!assume_conjecture) {
        result.value.add(s, count);
        continue;
      }
      Int classes =
          static_cast<Int>(enumerate_subgroups(m, *height, SubgroupFilter::positive).size());
      for (Int i = 0; i < m; ++i) {
        GradedSymbol nk = GradedSymbol::nil(1, s.degree - i);
        resolve_symbol(nk, table, result.value,
                       checked_mul(count, checked_mul(classes, binomial(m - 1, i))));
      }
      result.conjectural = true;
      result.truncated = true;
      continue;
    }
    resolve_symbol(s, table, result.value, count);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Four-term sequence

namespace {

FGAbelianGroup require_concrete(const RingTable& table, bool nil, Int degree) {
  auto entry = nil ? table.nk_entry(degree) : table.k_entry(degree);
  std::string name = (nil ? "NK_" : "K_") + std::to_string(degree);
  if (!entry || entry->kind == EntryKind::symbol)
    throw DomainError("four-term check needs a concrete entry for " + name);
  if (entry->is_zero()) return FGAbelianGroup::trivial();
  return *entry->group;
}

}  // namespace

FourTermReport four_term_check(Int q, const RingTable& table, FourTermOptions options) {
  FGAbelianGroup kq = require_concrete(table, false, q);
  FGAbelianGroup kq1 = require_concrete(table, false, q - 1);
  FGAbelianGroup nkq = require_concrete(table, true, q);

  PresentedAbelianGroup pk = PresentedAbelianGroup::from_group(kq);
  PresentedAbelianGroup pn = PresentedAbelianGroup::from_group(nkq);
  PresentedAbelianGroup pl = PresentedAbelianGroup::from_group(kq1);

  PresentedAbelianGroup plus = direct_sum(pk, pn);                 // K(R[t])
  PresentedAbelianGroup minus = plus;                              // K(R[1/t])
  PresentedAbelianGroup middle_pair = direct_sum(plus, minus);     // the direct sum of both
  PresentedAbelianGroup laurent = direct_sum(direct_sum(pk, pn), direct_sum(pn, pl));

  std::size_t gk = pk.generators, gn = pn.generators, gl = pl.generators;

  // d1: x -> (x, x) into the K blocks of both polynomial rings.
  IntMatrix d1(middle_pair.generators, gk);
  d1.paste(IntMatrix::identity(gk), 0, 0);
  d1.paste(IntMatrix::identity(gk), gk + gn, 0);

  // d2: (x, y) -> i+(x) - i-(y); blocks of the Laurent ring are
  // (K, N+, N-, K_{q-1}).
  IntMatrix d2(laurent.generators, middle_pair.generators);
  d2.paste(IntMatrix::identity(gk), 0, 0);
  d2.paste(IntMatrix::identity(gk).negated(), 0, gk + gn);
  if (!options.zero_middle_nil_block) d2.paste(IntMatrix::identity(gn), gk, gk);
  d2.paste(IntMatrix::identity(gn).negated(), gk + gn, gk + gn + gk);

  // d3: projection onto the bottom K_{q-1} block.
  IntMatrix d3(gl, laurent.generators);
  d3.paste(IntMatrix::identity(gl), 0, gk + gn + gn);

  Homomorphism h1(pk, middle_pair, d1);
  Homomorphism h2(middle_pair, laurent, d2);
  Homomorphism h3(laurent, pl, d3);

  std::vector<Homomorphism> seq;
  seq.push_back(Homomorphism::zero(PresentedAbelianGroup::trivial(), pk));
  seq.push_back(h1);
  seq.push_back(h2);
  seq.push_back(h3);
  seq.push_back(Homomorphism::zero(pl, PresentedAbelianGroup::trivial()));
  ExactnessReport ex = is_exact(seq);

  FourTermReport report;
  report.spot_names = {"K(R)", "K(R[t]) + K(R[1/t])", "K(R[t,1/t])", "LK(R)"};
  report.homology = ex.homology;
  report.exact = ex.exact;

  // The surjection onto LK(R) splits: the inclusion of the bottom block is a
  // section.
  IntMatrix section(laurent.generators, gl);
  section.paste(IntMatrix::identity(gl), gk + gn + gn, 0);
  Homomorphism s(pl, laurent, section);
  IntMatrix round_trip = compose(h3, s).matrix().subtract(IntMatrix::identity(gl));
  bool splits = true;
  for (std::size_t j = 0; j < round_trip.cols(); ++j)
    if (!column_lattice_contains(pl.relations, round_trip.column(j))) splits = false;
  report.splitting_verified = splits;
  return report;
}

WangPieces wang_pieces(const Homomorphism& alpha_at_q, const Homomorphism& alpha_below_q) {
  for (const Homomorphism* alpha : {&alpha_at_q, &alpha_below_q}) {
    if (!(alpha->source() == alpha->target()))
      throw DomainError("wang_pieces requires endomorphisms");
    if (!is_automorphism(*alpha)) throw DomainError("wang_pieces requires automorphisms");
  }

  auto one_minus = [](const Homomorphism& alpha) {
    IntMatrix m = IntMatrix::identity(alpha.source().generators).subtract(alpha.matrix());
    return Homomorphism(alpha.source(), alpha.target(), m);
  };

  Homomorphism f_q = one_minus(alpha_at_q);
  Homomorphism f_below = one_minus(alpha_below_q);

  WangPieces out;
  // coker(1 - alpha_q): quotient by the image of the endomorphism.
  out.cokernel_piece = canonical_group(
      {f_q.target().generators, f_q.matrix().hcat(f_q.target().relations)});
  // ker(1 - alpha_{q-1}) inside the presented group.
  Homomorphism from_zero = Homomorphism::zero(PresentedAbelianGroup::trivial(), f_below.source());
  out.kernel_piece = homology_at(from_zero, f_below);
  return out;
}

}  // namespace kdecomp
