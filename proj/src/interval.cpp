#include "homtwist/dg_category.hpp"

namespace homtwist {

std::string intervalLabel(int i, int j) {
    return std::to_string(i) + "->" + std::to_string(j);
}

CategoryPtr interval(int n, const Field& f) {
    if (n < 0) throw std::invalid_argument("interval: n must be nonnegative");
    std::vector<std::string> objects;
    objects.reserve(n + 1);
    for (int i = 0; i <= n; ++i) objects.push_back(std::to_string(i));
    auto cat = std::make_shared<FiniteDgCategory>(f, std::move(objects));

    std::vector<std::vector<int>> flat(n + 1, std::vector<int>(n + 1, -1));
    for (int i = 0; i <= n; ++i)
        for (int j = i; j <= n; ++j) flat[i][j] = cat->addBasisElement(i, j, intervalLabel(i, j), 0);

    FieldScalar one = FieldScalar::one(f);
    for (int i = 0; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            for (int k = j; k <= n; ++k) {
                MorCombination r;
                r.src = i;
                r.dst = k;
                r.addTerm(flat[i][k], one);
                cat->setComposition(BasisId{j, k, flat[j][k]}, BasisId{i, j, flat[i][j]}, std::move(r));
            }
    for (int i = 0; i <= n; ++i) cat->setIdentity(i, BasisId{i, i, flat[i][i]});
    cat->seal();
    return cat;
}

}  // namespace homtwist
