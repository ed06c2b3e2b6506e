#include "nihoapn/errors.hpp"

#include <sstream>

namespace nihoapn {

ReducibleModulus::ReducibleModulus(std::uint64_t modulus, int factor_degree)
    : ParamError("reducible_modulus",
                 [&] {
                     std::ostringstream os;
                     os << "modulus 0x" << std::hex << modulus << std::dec
                        << " is reducible (has a factor of degree " << factor_degree << ")";
                     return os.str();
                 }()),
      factor_degree_(factor_degree) {}

}  // namespace nihoapn
