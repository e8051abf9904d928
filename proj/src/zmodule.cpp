#include "tiltkit/zmodule.hpp"

namespace tiltkit {

AbGroup power_group(const AbGroup& g, int copies) {
    if (copies < 0) throw std::invalid_argument("negative copy count");
    AbGroup r;
    for (int c = 0; c < copies; ++c) r.inv.insert(r.inv.end(), g.inv.begin(), g.inv.end());
    return r;
}

ZMat zkron(const ZMat& a, const ZMat& b) {
    ZMat r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a.at(i, j) == 0) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    r.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
        }
    return r;
}

namespace {

// m as Z^d / im(R) induces, for any n, the map n^d -> n^k precomposing with R
// (its cokernel is ext^1) and the map n^k -> n^d multiplying by R (its kernel
// is tor_1 and its cokernel the tensor product).
AbMap resolution_map(const AbGroup& m, const AbGroup& n, bool precompose) {
    ZMat r = m.relation_columns();
    ZMat id = ZMat::identity(n.dim());
    if (precompose)
        return {power_group(n, m.dim()), power_group(n, r.cols()), zkron(r.transpose(), id)};
    return {power_group(n, r.cols()), power_group(n, m.dim()), zkron(r, id)};
}

}  // namespace

AbGroup z_ext(const AbGroup& m, const AbGroup& n, int degree) {
    if (degree < 0) throw std::invalid_argument("negative ext degree");
    if (degree == 0) return hom_group(m, n).group();
    if (degree >= 2) return {};
    return cokernel(resolution_map(m, n, true)).grp;
}

AbGroup z_tor(const AbGroup& m, const AbGroup& n, int degree) {
    if (degree < 0) throw std::invalid_argument("negative tor degree");
    if (degree >= 2) return {};
    AbMap mul = resolution_map(m, n, false);
    return degree == 0 ? cokernel(mul).grp : kernel(mul).grp;
}

}  // namespace tiltkit
