#pragma once

namespace mcy {

// The expected-values table (paper-derived golden data) as a JSON document.
const char* expected_values_json();

}  // namespace mcy
