// SPDX-License-Identifier: Apache-2.0

#ifndef SINGREEN_VERSION_HPP
#define SINGREEN_VERSION_HPP

namespace singreen {

inline constexpr const char* version_string = "0.1.0";

}

#endif
