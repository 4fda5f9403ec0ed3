#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "photocorr/quantum_defect.hpp"

namespace photocorr {

enum class Provenance { PaperTable, Derived, User };

std::string_view to_string(Provenance p);
std::optional<Provenance> provenance_from_string(std::string_view s);

struct Shell {
  int n = 1;
  int ell = 0;
  int occupancy = 0;
  std::optional<double> binding_energy_ev; // < 0

  bool operator==(const Shell &) const = default;
};

/// One atom of the dataset. Energies are kept in eV as written in the file;
/// the *_hartree accessors convert for the physics modules.
struct AtomRecord {
  double z = 0.0;
  std::string symbol;
  std::vector<Shell> shells;
  std::map<int, double> norm_sq_s;  // n -> N^2 of the ns state (bohr^-3)
  std::map<int, double> norm_ratio; // n -> N_ns / N_np
  std::optional<double> delta_h;
  std::optional<double> delta_inf;
  std::map<int, double> e_np_ev; // n -> binding energy of the np state
  std::map<std::string, Provenance> provenance; // field keyword -> tag

  bool operator==(const AtomRecord &) const = default;

  /// Highest occupied s shell; throws if the record has none.
  int n_h() const;
  /// Table value if present, else from norm_sq_s at n_h.
  double delta_h_value() const;
  /// Requires delta_inf.
  DefectModel defect_model() const;
  double e_np_hartree(int n) const;
  /// Provenance of a field keyword, User when untagged.
  Provenance provenance_of(const std::string &field) const;
  /// Throws DataError describing the first violated invariant.
  void validate() const;
};

class DataError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct ParseError {
  int line = 0;
  int column = 0;
  std::string message;
};

struct ParseResult {
  std::vector<AtomRecord> records;
  std::vector<ParseError> errors;
  bool ok() const { return errors.empty(); }
};

/// Parses the line-oriented atom format. Never throws on malformed input;
/// records with errors are dropped and every problem is reported.
ParseResult parse_atom_file(std::string_view text);

/// Parses and throws DataError listing the errors, if any.
std::vector<AtomRecord> parse_atom_file_or_throw(std::string_view text);

std::string serialize(const std::vector<AtomRecord> &records);

/// The eight bundled atoms (B, N, Ne, Si, Ar, Ge, Kr, Sn).
const std::vector<AtomRecord> &builtin_dataset();
/// Text of the bundled dataset, identical to data/atoms.dat.
std::string_view builtin_dataset_text();

/// Dataset from `path`, else from $PHOTOCORR_DATA, else the bundled one.
std::vector<AtomRecord> load_dataset(const std::optional<std::string> &path = {});

} // namespace photocorr
