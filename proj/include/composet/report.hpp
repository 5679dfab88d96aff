#pragma once

#include <string>
#include <vector>

namespace composet {

/// One documented divergence between a published closed form and the form
/// this library implements, re-validated against the recursive Mobius /
/// zeta ground truth every time the report is produced.
struct Finding {
  std::string id;
  std::string alternate_form;   // the form that does not survive the oracle
  std::string corrected_form;   // the form the library implements
  std::string validation;       // what was checked, with the first mismatch
  bool alternate_disagrees;     // the alternate really does fail somewhere
  bool corrected_agrees;        // the corrected form matches everywhere tested
};

struct DiscrepancyReport {
  std::vector<Finding> findings;
  bool all_confirmed;  // every alternate fails and every correction validates
  std::string to_string() const;
};

/// Checks the three known display issues live: the Mobius series
/// factorization over posets with several minimal elements, the exponents
/// in the zeta length generating function over a general poset, and the
/// closed form of the Mobius length generating function over rooted
/// forests.
DiscrepancyReport discrepancy_report();

}  // namespace composet
