#ifndef KREWERAS_ERRORS_HPP
#define KREWERAS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kreweras {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// word validation
struct not_balanced_error : error {
  using error::error;
};
struct prefix_violation_error : error {
  int index;  // 1-based length of the first violating prefix
  prefix_violation_error(const std::string& msg, int idx) : error(msg), index(idx) {}
};
struct empty_word_error : error {
  using error::error;
};
struct index_out_of_range_error : error {
  using error::error;
};

// bump / trip extraction
struct invalid_reconstruction_error : error {
  using error::error;
};
struct non_terminating_trip_error : error {
  using error::error;
};

// growth diagrams
struct malformed_cell_error : error {
  using error::error;
};

// webs
struct malformed_embedding_error : error {
  using error::error;
};
struct recovery_mismatch_error : error {
  using error::error;
};

// enumeration
struct not_polynomial_error : error {
  using error::error;
};
struct negative_coefficient_error : error {
  using error::error;
};
struct domain_error : error {
  using error::error;
};
struct orbit_size_error : error {
  using error::error;
};

}  // namespace kreweras

#endif
