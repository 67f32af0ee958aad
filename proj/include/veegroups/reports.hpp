#pragma once

#include <string>
#include <vector>

#include "veegroups/classify.hpp"
#include "veegroups/group_algebra.hpp"
#include "veegroups/vee.hpp"

namespace veegroups {

enum class OutputFormat { text, csv, json };

/// Parses "text" / "csv" / "json"; anything else throws std::invalid_argument.
OutputFormat parse_format(const std::string& name);

// ---- structure report ----------------------------------------------------

/// Structure summary for one group Q(t).  Capped at n <= 12 so the inner-
/// witness search stays interactive and every count fits in 64 bits.
struct InfoReport {
  Signature signature = Signature::pq(0, 0);
  long long order = 0;
  bool abelian = false;
  std::string normal_form;        // label of Q_{p,q} after sorting t
  long long normal_form_order = 0;
  std::vector<std::string> center_elements;
  std::string center_type;        // "C_2", "C_4" or "C_2 x C_2"
  long long class_count = 0;
  std::vector<std::string> commutator_elements;
  std::string even_signature;     // even-part signature; "" when n = 0
  std::string even_form;          // normal form of the even part
  bool alpha_inner = false;
  std::string alpha_witness;      // conjugator e_A when alpha_inner
  long long hyperoctahedral_order = 0;  // n! 2^n when all t_i agree, else 0
  long long automorphism_order = 0;     // |Aut| when |G| <= 16, else 0
};

InfoReport build_info(const Signature& s);
std::string render_info(const InfoReport& r, OutputFormat f);

// ---- multiplication table --------------------------------------------------

/// Full group table in the printed basis order: even subsets before odd ones,
/// masks ascending within each parity, and e_A immediately followed by Z e_A.
struct TableReport {
  Signature signature = Signature::pq(0, 0);
  std::vector<VeeElement> basis;
  std::vector<std::vector<VeeElement>> cells;  // cells[i][j] = basis[i]*basis[j]
};

TableReport build_table(const Signature& s);  // capped at n <= 8
std::string render_table(const TableReport& r, OutputFormat f);

// ---- periodic triangle -----------------------------------------------------

/// Entries for ranks 0..max_n (capped at 32), each rank ordered by descending
/// p so a rank reads left-to-right like the printed triangle.
std::vector<PeriodicEntry> build_periodic(int max_n);
std::string render_periodic(const std::vector<PeriodicEntry>& entries, int max_n,
                            OutputFormat f);

// ---- character matrix --------------------------------------------------------

/// chi_A(e_B) = (-1)^{|A cap B|} for all subsets, masks ascending both ways.
std::vector<std::vector<int>> build_characters(int n);  // capped at n <= 8
std::string render_characters(const std::vector<std::vector<int>>& matrix, int n,
                              OutputFormat f);

// ---- central-function basis ---------------------------------------------------

struct CentralReport {
  Signature signature = Signature::pq(0, 0);
  long long class_count = 0;
  std::vector<GroupAlgebraElement> basis;
};

CentralReport build_central(const Signature& s);  // capped at n <= 8
std::string render_central(const CentralReport& r, OutputFormat f);

// ---- Clifford structure constants ----------------------------------------------

/// One row per ordered pair: e_A e_B = sign * e_{A xor B} inside Q(t).
struct ConstantRow {
  uint64_t a = 0;
  uint64_t b = 0;
  int sign = 1;  // +1 or -1
  uint64_t product = 0;
};

struct ConstantsReport {
  Signature signature = Signature::pq(0, 0);
  std::vector<ConstantRow> rows;
};

ConstantsReport build_constants(const Signature& s);  // capped at n <= 8
std::string render_constants(const ConstantsReport& r, OutputFormat f);

}  // namespace veegroups
