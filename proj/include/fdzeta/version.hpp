#ifndef FDZETA_VERSION_HPP
#define FDZETA_VERSION_HPP

namespace fdzeta {

inline constexpr const char* version_string = "0.1.0";

}  // namespace fdzeta

#endif
