#pragma once

#include <cstddef>
#include <vector>

namespace uavc {

// Windowed-sinc fractional resampler (Kaiser beta 8.6, 64 zero crossings).
// `ratio` = output rate / input rate. Output length = round(n * ratio)
// unless an explicit out_len is requested.
std::vector<float> resample(const std::vector<float>& x, double ratio,
                            size_t out_len = 0);

} // namespace uavc
