#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "aligned/exact/ratfn.hpp"
#include "aligned/spaces/aligned_space.hpp"
#include "aligned/spaces/groups.hpp"

namespace aligned::spaces {

/// Parse or validation failure; what() carries "<source>:<line>: ...".
class CatalogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One isotropy irreducible G/K with K simple.
struct IrreducibleFactor {
  std::string name;  // e.g. "SO(8)"
  GroupFamily group_family = GroupFamily::SO;
  long group_dim = 0;
  long n = 0;  // dim G - dim K
  Rational a;  // Killing constant
  std::string isotropy_K;
  long d = 0;
  bool underlined = false;  // sporadic attachment to a parametric K
  bool adjoint = false;     // K -> SO(dim K) via the adjoint representation
  bool bound_exempt = false;  // published a violates a < (2d+n)/(2d+2n); kept verbatim
  std::string embedding_note;
  int line = 0;
};

struct KGroup {
  std::string name;  // e.g. "SO(9)"
  long d = 0;
  std::optional<GroupFamily> param_family;  // set when K is a member of a parametric row
  long m = 0;
  std::vector<IrreducibleFactor> factors;
};

struct ParamFactor {
  GroupName group;
  exact::RatFn a;
  exact::RatFn n;  // dim G(m) - d(m)
  bool adjoint = false;
  bool bound_exempt = false;
  int line = 0;
};

struct ParamKGroup {
  GroupName K;  // e.g. SO(m)
  exact::RatFn d;
  long m_min = 0;
  std::vector<ParamFactor> factors;
};

/// Existence over the integers m >= m_min: everywhere, nowhere, m <= k or m >= k.
struct ExistenceSet {
  enum class Kind { kAll, kNone, kUpTo, kFrom };
  Kind kind = Kind::kAll;
  long k = 0;

  bool contains(long m) const;
  /// "all", "none", "m<=8", "m>=10".
  std::string to_string() const;
  /// Accepts exactly the spellings produced by to_string().
  static ExistenceSet parse(std::string_view text);
  friend bool operator==(const ExistenceSet& x, const ExistenceSet& y) {
    return x.kind == y.kind && (x.kind == Kind::kAll || x.kind == Kind::kNone || x.k == y.k);
  }
};

/// G1(m) x G2(m) / K(m) for integers m >= m_min. Field order follows the
/// catalog row, which need not be the canonical a1 <= a2 order.
struct FamilySpec {
  std::string name;
  GroupName K;
  GroupName G1;
  GroupName G2;
  long m_min = 0;
  exact::RatFn n1_of_m, n2_of_m, d_of_m;
  exact::RatFn a1_of_m, a2_of_m;
  ExistenceSet expected;
  int table_row = 0;

  /// "SO((m-1)*(m+2)/2)xSO(m+1)/SO(m)".
  std::string display() const;
  /// Concrete space at m (canonicalized). Throws InvariantError when an
  /// invariant fails and std::domain_error for non-integral dimensions.
  AlignedSpace instantiate(long m) const;
};

/// A row of one of the published tables together with its expected verdict.
struct TableRow {
  enum class Kind { kSpace, kInstance, kFamily };
  std::string table;  // spo, spo2, sym, flies
  int row = 0;
  Kind kind = Kind::kSpace;
  std::string K, G1, G2;  // kSpace
  std::string name;       // kInstance: display identifier
  std::string family;     // kInstance / kFamily
  long m = 0;             // kInstance
  bool expect_exists = false;
  int line = 0;
};

struct AbelianTemplate {
  std::string name;
  GroupName G1;
  GroupName G2;
  exact::RatFn rank;
  long m_min = 0;  // 0 for fixed groups

  /// n1, n2, d at m (m ignored for fixed groups).
  void dimensions(long m, long& n1, long& n2, long& d) const;
};

struct AbelianExample {
  std::string name;
  std::string template_name;
  long m = 0;
  long p = 1, q = 1;
  Rational kappa1, kappa2;
  long n1 = 0, n2 = 0, d = 0;
};

struct Catalog {
  std::string source;
  std::vector<KGroup> kgroups;
  std::vector<ParamKGroup> param_kgroups;
  std::vector<FamilySpec> families;
  std::vector<TableRow> rows;
  std::vector<AbelianTemplate> abelian_templates;
  std::vector<AbelianExample> abelian_examples;

  const KGroup* find_kgroup(const std::string& name) const;
  const FamilySpec* find_family(const std::string& name) const;
  const AbelianTemplate* find_abelian_template(const std::string& name) const;
  const AbelianExample* find_abelian_example(const std::string& name) const;
};

/// Reads and validates a catalog file (see data/catalog.txt for the schema).
Catalog load_catalog(const std::string& path);
Catalog parse_catalog(std::string_view text, const std::string& source = "<memory>");

/// The bundled catalog path, overridable through ALIGNED_CATALOG.
std::string default_catalog_path();

/// A sporadic member of class C with its group labels in canonical order.
struct CatalogSpace {
  AlignedSpace space;
  std::string K, G1, G2;
};

struct ClassC {
  std::vector<CatalogSpace> sporadic;
  std::vector<FamilySpec> families;
};

inline constexpr std::size_t kSporadicCount = 70;
inline constexpr std::size_t kFamilyCount = 12;

/// All pairs of distinct factors over a common simple K. Pairs of generic
/// factors of a parametric K belong to the families; pairs involving an
/// underlined attachment, or over a sporadic K, are sporadic. With
/// check_counts, anything other than 70 + 12 raises CatalogError.
ClassC enumerate_class_C(const Catalog& catalog, bool check_counts = true);

/// "G2xSp2_SU2": compact factor names in canonical order, then K.
std::string space_identifier(const std::string& G1, const std::string& G2, const std::string& K);

}  // namespace aligned::spaces
