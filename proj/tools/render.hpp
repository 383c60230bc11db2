#pragma once

#include <string>

#include "json.hpp"
#include "kdecomp/assembler.hpp"

namespace kdecomp::cli {

enum class Format { text, json };

// Shared JSON fragments (used by the renderers and by tests).
nlohmann::ordered_json group_to_json(const FGAbelianGroup& g);
nlohmann::ordered_json symbol_to_json(const GradedSymbol& s);
nlohmann::ordered_json matrix_to_json(const IntMatrix& m);
nlohmann::ordered_json totals_to_json(const FormalGradedGroup& g);

std::string render_decomposition(const std::string& command, const DecompositionReport& report,
                                 const std::string& table_name, Format format);
std::string render_kregular(const KRegularReport& report, const std::string& table_name,
                            Format format);
std::string render_fold(const FoldReport& report, Format format);
std::string render_oracle_compare(const OracleCompareReport& report, const std::string& table_name,
                                  Format format);
std::string render_dihedral(const DihedralReport& report, Format format);
std::string render_homology_demo(Int torus_dim, Format format);

}  // namespace kdecomp::cli
