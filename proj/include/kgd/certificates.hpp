#ifndef KGD_CERTIFICATES_HPP
#define KGD_CERTIFICATES_HPP

#include <optional>
#include <string>
#include <vector>

#include "kgd/json_io.hpp"

namespace kgd {

enum class Provenance {
  exact,        // certified by an exact solve in this toolkit
  heuristic,    // relies on a heuristic optimum, never silently upgraded
  closed_form,  // evaluated closed-form expression
  literature,   // external constant, cited, never recomputed
  recorded,     // published result of this pipeline at beyond-desk scale
};

std::string provenance_name(Provenance p);
Provenance provenance_from_name(const std::string& s);

/// Auditable record of one bound on K_G(d -> n).
struct BoundCertificate {
  int d = 0;
  int n = 1;
  bool lower = true;  // false: upper bound
  double value = 0.0;  // display value (safe side of the exact value)
  std::optional<ExactScalar> value_exact;
  Provenance provenance = Provenance::exact;
  std::string witness;   // configuration / construction
  std::string citation;  // for literature entries
  bool gram_witness = false;  // witness direction M equals the Gram matrix P
  std::optional<ExactScalar> lambda;  // diagonal modification, when meaningful
  std::vector<int> monotonicity_chain;  // orders traversed by propagation
  json detail;  // free-form payload: matrices, history, solver stats

  json to_json() const;
  static BoundCertificate from_json(const json& j);
};

/// Append-only directory of certificate JSON files.
class CertificateStore {
 public:
  explicit CertificateStore(std::string dir);

  /// Writes the certificate as a new JSON file; returns its path.
  std::string add(const BoundCertificate& cert);
  /// All certificates currently on disk.
  std::vector<BoundCertificate> load_all() const;

  const std::string& dir() const { return dir_; }

 private:
  std::string dir_;
};

struct BestKnownRow {
  int d = 0;
  double value = 0.0;
  std::string value_text;
  Provenance provenance = Provenance::closed_form;
  std::string source;  // witness or citation
  int source_d = 0;    // order the value was established at
  std::vector<int> monotonicity_chain;
  // Backing certificate, so every reported number traces to a stored record.
  std::optional<BoundCertificate> source_cert;
  // Best heuristic-only (putative) value when it beats the certified one;
  // rendered with an asterisk in reports.
  double heuristic_value = 0.0;
  std::string heuristic_source;
  std::optional<BoundCertificate> heuristic_cert;
};

/// Best known lower bound on K_G(d): maximum over stored certificates of
/// order <= d, the closed-form PSD constant, and the built-in literature and
/// recorded tables; monotone propagation is recorded in the chain.
/// With include_builtin = false only the supplied store participates (no
/// closed-form floor), for store-scoped reports.
BestKnownRow best_known(int d, const std::vector<BoundCertificate>& store,
                        bool include_builtin = true);

/// Per-order table for 2 <= d <= d_max.
std::vector<BestKnownRow> best_known_table(
    int d_max, const std::vector<BoundCertificate>& store);

/// Store-scoped table: rows span the stored orders, propagated up to d_max
/// (default: the largest stored order).
std::vector<BestKnownRow> store_report_table(
    const std::vector<BoundCertificate>& store, int d_max = 0);

/// Text table + CSV export ("d,value,provenance,source,chain").
std::string report_text(const std::vector<BestKnownRow>& rows);
std::string report_csv(const std::vector<BestKnownRow>& rows);

/// Built-in literature constants (cited, never recomputed).
const std::vector<BoundCertificate>& literature_bounds();
/// Published large-scale results of this pipeline (recorded, not re-derived).
const std::vector<BoundCertificate>& recorded_bounds();

}  // namespace kgd

#endif  // KGD_CERTIFICATES_HPP
