#include "cellres/error.hpp"

namespace cellres {

namespace {

std::string describe_flat(const std::vector<std::size_t>& flat) {
  std::string s = "{";
  for (std::size_t i = 0; i < flat.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(flat[i] + 1);
  }
  return s + "}";
}

}  // namespace

NotGeneralPosition::NotGeneralPosition(std::vector<std::size_t> flat)
    : PreconditionError("g is not in general position: the flat " + describe_flat(flat) +
                        " of non-spanning hyperplanes has empty intersection"),
      flat_(std::move(flat)) {}

GenericityFailure::GenericityFailure(std::vector<std::size_t> flat)
    : PreconditionError("functional is not generic: it vanishes on the line cut out by rows " +
                        describe_flat(flat)),
      flat_(std::move(flat)) {}

}  // namespace cellres
