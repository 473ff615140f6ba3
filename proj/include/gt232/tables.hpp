#ifndef GT232_TABLES_HPP
#define GT232_TABLES_HPP

#include <array>
#include <vector>

namespace gt232 {

/// Catalogue of the 31 words (up to equivalence) with trace polynomial
/// λ (λ^2-2)^c (λ^4-3λ^2+1)^e.
struct CatalogueRow {
  int n;
  int c;
  int e;
  const char* word;
};
const std::vector<CatalogueRow>& table1();

/// The 16 catalogue words that decompose into 3 non-pieces of even length
/// at least 8, with the bundled factorizations.
struct DecompositionRow {
  int n;  // catalogue row number
  std::array<const char*, 3> factors;
};
const std::vector<DecompositionRow>& table2();

}  // namespace gt232

#endif
