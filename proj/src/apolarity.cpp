#include "waring/apolarity.hpp"

namespace waring {

int border_rank(const BinaryForm& f) { return border_rank_with_kernel(f).first; }

RankCertificate rank(const BinaryForm& f) { return rank_certificate(f); }

BorderScheme border_scheme(const BinaryForm& f) {
    auto [w, basis] = border_rank_with_kernel(f);
    if (basis.size() > 1)
        throw AmbiguousScheme("kernel at the border-rank level has dimension " + std::to_string(basis.size()));
    return {squarefree_decompose(normalized(basis.front())), 2 * w <= f.degree() + 1};
}

}  // namespace waring
