#pragma once

#include <stdexcept>
#include <string>

namespace plethz {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct size_mismatch : error { using error::error; };
struct shape_not_contained : error { using error::error; };
struct empty_partition : error { using error::error; };
struct mixed_sizes : error { using error::error; };
struct scale_exceeded : error { using error::error; };
struct non_integer_result : error { using error::error; };
struct negative_result : error { using error::error; };
struct precondition_violated : error { using error::error; };
struct arity_error : error { using error::error; };
struct not_a_hook : error { using error::error; };
struct theorem_violated : error { using error::error; };
struct overflow : error { using error::error; };
struct cache_corruption : error { using error::error; };
struct parse_error : error { using error::error; };

} // namespace plethz
