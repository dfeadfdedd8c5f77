#include "idm/lce.hpp"

#include "idm/suffix_array.hpp"

namespace idm {

Lce::Lce(std::span<const Index> sa, std::span<const Index> lcp)
    : n_(static_cast<Index>(sa.size()) - 1),
      rank_(invert_suffix_array(sa)),
      lcp_(std::vector<Index>(lcp.begin(), lcp.end())) {}

}  // namespace idm
