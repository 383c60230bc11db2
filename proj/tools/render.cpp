#include "render.hpp"

#include <sstream>

namespace kdecomp::cli {

using nlohmann::ordered_json;

namespace {

std::string sign_to_string(SummandSign s) { return s == SummandSign::plus ? "+" : "-"; }

std::string finish_json(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string group_list_text(const std::vector<FGAbelianGroup>& groups) {
  std::ostringstream os;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (i > 0) os << ", ";
    os << groups[i].to_string();
  }
  return os.str();
}

void totals_to_text(std::ostream& os, const FormalGradedGroup& totals, Int q) {
  if (totals.multiplicity.empty()) {
    os << "  (trivial group)\n";
    return;
  }
  for (auto& [symbol, count] : totals.multiplicity) {
    os << "  " << symbol.to_string_relative(q) << " x" << count;
    auto it = totals.resolved.find(symbol);
    if (it != totals.resolved.end()) os << " = " << it->second.to_string();
    os << "\n";
  }
}

}  // namespace

ordered_json group_to_json(const FGAbelianGroup& g) {
  ordered_json j;
  j["rank"] = g.free_rank;
  j["torsion"] = g.torsion;
  return j;
}

ordered_json symbol_to_json(const GradedSymbol& s) {
  ordered_json j;
  switch (s.kind) {
    case GradedSymbol::Kind::K: j["kind"] = "K"; break;
    case GradedSymbol::Kind::Nil:
      j["kind"] = "NK";
      j["power"] = s.power;
      break;
    case GradedSymbol::Kind::TwistedNilAlpha: j["kind"] = "NK_alpha"; break;
    case GradedSymbol::Kind::TwistedNilAlphaInv: j["kind"] = "NK_alpha_inv"; break;
  }
  j["degree"] = s.degree;
  return j;
}

ordered_json matrix_to_json(const IntMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json totals_to_json(const FormalGradedGroup& g) {
  ordered_json list = ordered_json::array();
  for (auto& [symbol, count] : g.multiplicity) {
    ordered_json item;
    item["symbol"] = symbol_to_json(symbol);
    item["multiplicity"] = count;
    auto it = g.resolved.find(symbol);
    if (it != g.resolved.end()) item["resolved"] = group_to_json(it->second);
    list.push_back(std::move(item));
  }
  return list;
}

std::string render_decomposition(const std::string& command, const DecompositionReport& report,
                                 const std::string& table_name, Format format) {
  FormalGradedGroup totals = report.totals();
  if (format == Format::json) {
    ordered_json j;
    j["command"] = command;
    j["table"] = table_name;
    j["n"] = report.n;
    j["q"] = report.q;
    j["target"] = report.target;
    j["conjectural"] = report.conjectural;
    j["truncated"] = report.truncated;
    if (report.height) j["height"] = *report.height;
    j["totals"] = totals_to_json(totals);
    ordered_json summands = ordered_json::array();
    for (const SummandRecord& rec : report.summands) {
      ordered_json item;
      item["part"] = rec.subgroup ? "nil" : "k";
      if (rec.word) item["word"] = word_to_string(*rec.word);
      if (rec.subgroup) item["subgroup"] = rec.subgroup->coords();
      if (rec.sign) item["sign"] = sign_to_string(*rec.sign);
      item["symbol"] = symbol_to_json(rec.symbol);
      if (rec.resolved) item["resolved"] = group_to_json(*rec.resolved);
      if (rec.basis_change) item["beta"] = matrix_to_json(*rec.basis_change);
      summands.push_back(std::move(item));
    }
    j["summands"] = std::move(summands);
    return finish_json(j);
  }

  std::ostringstream os;
  os << "command: " << command << "\n";
  os << "table: " << table_name << "\n";
  os << "n: " << report.n << "\n";
  os << "q: " << report.q << "\n";
  os << "target: " << report.target << "\n";
  if (report.truncated)
    os << "status: truncated at height " << *report.height << "\n";
  else
    os << "status: exact\n";
  os << "conjectural: " << (report.conjectural ? "yes" : "no") << "\n";
  os << "totals:\n";
  totals_to_text(os, totals, report.q);

  bool have_k = false;
  for (const SummandRecord& rec : report.summands)
    if (!rec.subgroup) have_k = true;
  if (have_k) {
    os << "k-part:\n";
    for (const SummandRecord& rec : report.summands) {
      if (rec.subgroup) continue;
      os << "  " << word_to_string(rec.word.value_or(OpWord{})) << " -> "
         << rec.symbol.to_string_relative(report.q);
      if (rec.resolved) os << " = " << rec.resolved->to_string();
      os << "\n";
    }
  }
  bool have_nil = false;
  for (const SummandRecord& rec : report.summands)
    if (rec.subgroup) have_nil = true;
  if (have_nil) {
    os << "nil-part:\n";
    const PrimitiveVector* current = nullptr;
    for (const SummandRecord& rec : report.summands) {
      if (!rec.subgroup) continue;
      if (current == nullptr || !(*current == *rec.subgroup)) {
        os << "  C = " << rec.subgroup->to_string();
        if (rec.basis_change) os << ", beta = " << rec.basis_change->to_string();
        os << "\n";
        current = &*rec.subgroup;
      }
      os << "    " << word_to_string(rec.word.value_or(OpWord{}));
      if (rec.sign) os << " " << sign_to_string(*rec.sign);
      os << " -> " << rec.symbol.to_string_relative(report.q);
      if (rec.resolved) os << " = " << rec.resolved->to_string();
      os << "\n";
    }
  }
  return os.str();
}

std::string render_kregular(const KRegularReport& report, const std::string& table_name,
                            Format format) {
  if (format == Format::json) {
    ordered_json j;
    j["command"] = "kregular";
    j["table"] = table_name;
    j["n"] = report.n;
    j["q"] = report.q;
    j["satisfied"] = report.satisfied;
    j["verdict"] = report.verdict;
    j["verdict_unconditional"] = report.verdict_unconditional;
    j["offending_degrees"] = report.offending_degrees;
    ordered_json trace = ordered_json::array();
    for (const KRegularTraceEntry& entry : report.trace) {
      ordered_json item;
      item["word"] = word_to_string(entry.word);
      item["value"] = symbol_to_json(entry.value);
      item["killed_by"] = entry.killed_by;
      trace.push_back(std::move(item));
    }
    j["trace_heuristic"] = report.trace_heuristic;
    j["trace"] = std::move(trace);
    return finish_json(j);
  }

  std::ostringstream os;
  os << "command: kregular\n";
  os << "table: " << table_name << "\n";
  os << "n: " << report.n << "\n";
  os << "q: " << report.q << "\n";
  os << "window:";
  for (Int i = 0; i < report.n; ++i) os << " " << GradedSymbol::nil(1, report.q - i).to_string_relative(report.q);
  os << "\n";
  os << "verdict: " << report.verdict << "\n";
  os << "satisfied: " << (report.satisfied ? "yes" : "no") << "\n";
  if (!report.offending_degrees.empty()) {
    os << "offending degrees:";
    for (Int d : report.offending_degrees) os << " " << d;
    os << "\n";
  }
  if (!report.trace.empty()) {
    os << "trace (word-level, via the iterated-Nil reduction; informational):\n";
    for (const KRegularTraceEntry& entry : report.trace) {
      os << "  " << word_to_string(entry.word) << " -> "
         << entry.value.to_string_relative(report.q) << ", killed by NK at degrees";
      for (Int d : entry.killed_by) os << " " << d;
      os << "\n";
    }
  }
  return os.str();
}

std::string render_fold(const FoldReport& report, Format format) {
  if (format == Format::json) {
    ordered_json j;
    j["command"] = "verify-fold";
    j["n"] = report.n;
    j["q"] = report.q;
    j["height"] = report.height;
    j["expected_fiber_size"] = report.expected_fiber_size;
    j["image_complete"] = report.image_complete;
    j["pass"] = report.pass;
    ordered_json classes = ordered_json::array();
    for (const FoldClassCheck& check : report.classes) {
      ordered_json item;
      item["folded"] = check.key.coords();
      ordered_json fiber = ordered_json::array();
      for (const PrimitiveVector& v : check.fiber) fiber.push_back(v.coords());
      item["fiber"] = std::move(fiber);
      item["fiber_size_ok"] = check.fiber_size_ok;
      item["positive_ok"] = check.positive_ok;
      item["left_multiplicity"] = check.left_multiplicity;
      item["right_multiplicity"] = check.right_multiplicity;
      item["multiplicities_ok"] = check.multiplicities_ok;
      classes.push_back(std::move(item));
    }
    j["classes"] = std::move(classes);
    return finish_json(j);
  }

  std::ostringstream os;
  os << "command: verify-fold\n";
  os << "n: " << report.n << "\n";
  os << "q: " << report.q << "\n";
  os << "height: " << report.height << "\n";
  os << "expected fiber size: " << report.expected_fiber_size << "\n";
  os << "classes: " << report.classes.size() << "\n";
  os << "image complete: " << (report.image_complete ? "yes" : "no") << "\n";
  for (const FoldClassCheck& check : report.classes) {
    os << "  " << check.key.to_string() << ": fiber {";
    for (std::size_t i = 0; i < check.fiber.size(); ++i) {
      if (i > 0) os << ",";
      os << check.fiber[i].to_string();
    }
    os << "} size " << check.fiber.size();
    bool ok = check.fiber_size_ok && check.positive_ok && check.multiplicities_ok;
    os << (ok ? " ok" : " FAIL");
    if (!check.positive_ok) os << " (image not all-positive)";
    if (!check.fiber_size_ok) os << " (fiber size != " << report.expected_fiber_size << ")";
    if (!check.multiplicities_ok) os << " (multiplicity mismatch)";
    os << "\n";
  }
  os << "verdict: " << (report.pass ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string render_oracle_compare(const OracleCompareReport& report, const std::string& table_name,
                                  Format format) {
  if (format == Format::json) {
    ordered_json j;
    j["command"] = "verify-ft";
    j["table"] = table_name;
    j["n"] = report.n;
    j["q"] = report.q;
    j["height"] = report.height;
    j["assume_conjecture"] = report.assume_conjecture;
    j["pass"] = report.pass;
    j["oracle"] = totals_to_json(report.oracle);
    j["closed"] = totals_to_json(report.closed);
    ordered_json diffs = ordered_json::array();
    for (const auto& d : report.diffs) {
      ordered_json item;
      item["symbol"] = symbol_to_json(d.symbol);
      item["oracle_multiplicity"] = d.oracle_multiplicity;
      item["closed_multiplicity"] = d.closed_multiplicity;
      diffs.push_back(std::move(item));
    }
    j["diffs"] = std::move(diffs);
    return finish_json(j);
  }

  std::ostringstream os;
  os << "command: verify-ft\n";
  os << "table: " << table_name << "\n";
  os << "n: " << report.n << "\n";
  os << "q: " << report.q << "\n";
  os << "height: " << report.height << "\n";
  os << "assume conjecture: " << (report.assume_conjecture ? "yes" : "no") << "\n";
  os << "oracle totals (iterated one-variable fundamental theorem):\n";
  totals_to_text(os, report.oracle, report.q);
  os << "closed totals (closed-form decomposition):\n";
  totals_to_text(os, report.closed, report.q);
  if (report.diffs.empty()) {
    os << "diffs: none\n";
  } else {
    os << "diffs:\n";
    for (const auto& d : report.diffs)
      os << "  " << d.symbol.to_string_relative(report.q) << ": oracle x"
         << d.oracle_multiplicity << " vs closed x" << d.closed_multiplicity << "\n";
  }
  os << "verdict: " << (report.pass ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string render_dihedral(const DihedralReport& report, Format format) {
  if (format == Format::json) {
    ordered_json j;
    j["command"] = "dihedral";
    j["q"] = report.q;
    ordered_json chain = ordered_json::array();
    for (const DihedralLink& link : report.chain) {
      ordered_json item;
      item["lhs"] = link.lhs;
      item["rhs"] = link.rhs;
      item["mechanism"] = link.mechanism;
      chain.push_back(std::move(item));
    }
    j["chain"] = std::move(chain);
    if (report.stand_in) {
      j["stand_in"] = group_to_json(*report.stand_in);
      j["coinvariants"] = group_to_json(report.coinvariants);
      ordered_json higher = ordered_json::array();
      for (const FGAbelianGroup& g : report.higher) higher.push_back(group_to_json(g));
      j["higher"] = std::move(higher);
      j["verified"] = report.verified;
    }
    return finish_json(j);
  }

  std::ostringstream os;
  os << "command: dihedral\n";
  os << "q: " << report.q << "\n";
  os << "identification chain:\n";
  for (std::size_t i = 0; i < report.chain.size(); ++i) {
    os << "  " << (i + 1) << ". " << report.chain[i].lhs << " == " << report.chain[i].rhs << "\n";
    os << "     [" << report.chain[i].mechanism << "]\n";
  }
  if (report.stand_in) {
    os << "stand-in for the twisted Nil group: " << report.stand_in->to_string() << "\n";
    os << "H_0(Z/2; G + G, swap) = " << report.coinvariants.to_string() << "\n";
    os << "H_1..H_4 = " << group_list_text(report.higher) << "\n";
    os << "verified: " << (report.verified ? "yes" : "no") << "\n";
  } else {
    os << "stand-in: none (symbolic chain only)\n";
  }
  return os.str();
}

std::string render_homology_demo(Int torus_dim, Format format) {
  ChainComplex circle = circle_complex();
  std::vector<FGAbelianGroup> torus =
      homology_with_coefficients(torus_complex(torus_dim),
                                 CoefficientModule::plain(PresentedAbelianGroup::free_group(1)));
  std::vector<FGAbelianGroup> flat = mapping_torus_homology(circle, ChainMap::identity(circle));
  // Reflection of the circle: identity on 0-chains, -1 on 1-chains.
  ChainMap reflection;
  reflection.maps = {IntMatrix::identity(1), IntMatrix(1, 1, {-1})};
  std::vector<FGAbelianGroup> klein = mapping_torus_homology(circle, reflection);

  PresentedAbelianGroup z = PresentedAbelianGroup::free_group(1);
  CoefficientModule trivial_z = CoefficientModule::with_involution(z, IntMatrix::identity(1));
  std::vector<FGAbelianGroup> periodic = z2_homology(trivial_z, 4);

  PresentedAbelianGroup z3 = PresentedAbelianGroup::from_group(FGAbelianGroup::cyclic(3));
  PresentedAbelianGroup z3z3 = direct_sum(z3, z3);
  IntMatrix swap(2, 2);
  swap(0, 1) = 1;
  swap(1, 0) = 1;
  CoefficientModule swapped = CoefficientModule::with_involution(z3z3, swap);
  std::vector<FGAbelianGroup> coinv = z2_homology(swapped, 4);

  if (format == Format::json) {
    auto groups = [](const std::vector<FGAbelianGroup>& v) {
      ordered_json list = ordered_json::array();
      for (const FGAbelianGroup& g : v) list.push_back(group_to_json(g));
      return list;
    };
    ordered_json j;
    j["command"] = "homology-demo";
    j["torus_dimension"] = torus_dim;
    j["torus_homology"] = groups(torus);
    j["mapping_torus_identity"] = groups(flat);
    j["mapping_torus_degree_minus_one"] = groups(klein);
    j["z2_homology_trivial_on_Z"] = groups(periodic);
    j["z2_homology_swap_on_Z3_pair"] = groups(coinv);
    return finish_json(j);
  }

  auto print_groups = [](std::ostream& os, const std::vector<FGAbelianGroup>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
      os << "  H_" << i << " = " << v[i].to_string() << "\n";
  };
  std::ostringstream os;
  os << "command: homology-demo\n";
  os << "torus T^" << torus_dim << " (cellular chain complex, integral homology):\n";
  print_groups(os, torus);
  os << "mapping torus of the circle, f = id (2-torus):\n";
  print_groups(os, flat);
  os << "mapping torus of the circle, f = -1 (Klein bottle):\n";
  print_groups(os, klein);
  os << "Z/2 group homology, trivial action on Z, degrees 0..4:\n";
  print_groups(os, periodic);
  os << "Z/2 group homology, swap action on Z/3 + Z/3, degrees 0..4:\n";
  print_groups(os, coinv);
  return os.str();
}

}  // namespace kdecomp::cli
