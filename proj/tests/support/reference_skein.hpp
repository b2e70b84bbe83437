#pragma once

#include <knotarc/laurent.hpp>

#include <map>
#include <vector>

namespace knotarc::fixtures {

/// Same skein relation, but the first band with two or more crossings is
/// reduced instead of the largest, bands are never reordered and the memo is
/// keyed on the raw twist list.
class ReferenceSkein {
 public:
  Laurent2 operator()(const std::vector<int>& t);

 private:
  Laurent2 compute(std::vector<int> t);
  Laurent2 band(const std::vector<int>& t, std::size_t i);

  std::map<std::vector<int>, Laurent2> memo_;
};

}  // namespace knotarc::fixtures
