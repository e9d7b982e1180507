#ifndef SIGLAP_VERSION_HPP
#define SIGLAP_VERSION_HPP

#include <string_view>

namespace siglap {

inline constexpr std::string_view version = "0.1.0";

}  // namespace siglap

#endif
