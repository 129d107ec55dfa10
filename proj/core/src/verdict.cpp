#include "treeshift/verdict.hpp"

namespace treeshift {

std::string status_to_string(Status status) {
    switch (status) {
    case Status::holds:
        return "holds";
    case Status::fails:
        return "fails";
    case Status::inconclusive:
        return "inconclusive-at-horizon";
    }
    return "?";
}

} // namespace treeshift
