#include "homtwist/fixtures.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace homtwist {

CategoryPtr collapseFixture(const Field& f) {
    auto cat = std::make_shared<FiniteDgCategory>(f, std::vector<std::string>{"0", "1"});
    int id0 = cat->addBasisElement(0, 0, "id_0", 0);
    int id1 = cat->addBasisElement(1, 1, "id_1", 0);
    int u = cat->addBasisElement(0, 1, "u", 0);
    int v = cat->addBasisElement(0, 1, "v", -1);
    int w = cat->addBasisElement(0, 1, "w", 0);
    (void)u;
    cat->addDifferentialTerm(BasisId{0, 1, v}, BasisId{0, 1, w}, FieldScalar::one(f));
    cat->setIdentity(0, BasisId{0, 0, id0});
    cat->setIdentity(1, BasisId{1, 1, id1});
    cat->seal();
    return cat;
}

DgFunctor collapseFunctor(CategoryPtr fixture, CategoryPtr interval1) {
    DgFunctor out(fixture, interval1, {0, 1});
    const HomSpace& h = fixture->hom(0, 1);
    int u = h.byLabel.at("u");
    int v = h.byLabel.at("v");
    int w = h.byLabel.at("w");
    int g = interval1->hom(0, 1).byLabel.at(intervalLabel(0, 1));
    MorCombination gImg = interval1->basisCombination(BasisId{0, 1, g});
    out.setBasisImage(BasisId{0, 1, u}, gImg);
    out.setBasisImage(BasisId{0, 1, v}, interval1->zeroCombination(0, 1));
    out.setBasisImage(BasisId{0, 1, w}, interval1->zeroCombination(0, 1));
    out.setBasisImage(fixture->identity(0), interval1->basisCombination(interval1->identity(0)));
    out.setBasisImage(fixture->identity(1), interval1->basisCombination(interval1->identity(1)));
    return out;
}

namespace {

struct Edge {
    int src, dst, degree;
    std::string label;
    // differential: combinations of parallel paths, each path a list of edge
    // ids composed left-to-right from the source
    std::vector<std::pair<std::vector<int>, FieldScalar>> diff;
};

using Path = std::vector<int>;

}  // namespace

CategoryPtr randomDirectedDg(std::uint64_t seed, const Field& f) {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ (seed * 0xbf58476d1ce4e5b9ULL + 1));
    auto chance = [&](int percent) {
        return static_cast<int>(rng() % 100) < percent;
    };
    auto coeff = [&]() {
        static const int vals[] = {-2, -1, 1, 2, 3};
        return FieldScalar::ofInt(f, vals[rng() % 5]);
    };

    int objectCount = (seed % 3 == 0) ? 4 : 3;
    std::vector<Edge> edges;
    auto addEdge = [&](int s, int d, int deg, const std::string& base) {
        std::ostringstream label;
        label << base << s << d;
        edges.push_back(Edge{s, d, deg, label.str(), {}});
        return static_cast<int>(edges.size()) - 1;
    };

    // closed degree-0 spine along consecutive objects
    std::vector<int> spine;
    for (int i = 0; i + 1 < objectCount; ++i) spine.push_back(addEdge(i, i + 1, 0, "a"));

    // one guaranteed non-closed edge: du = c * a01
    {
        int u = addEdge(0, 1, -1, "u");
        edges[u].diff.push_back({{spine[0]}, coeff()});
    }
    // optional closed degree -1 edges on consecutive pairs
    for (int i = 0; i + 1 < objectCount; ++i)
        if (chance(50)) addEdge(i, i + 1, -1, "b");
    // optional exact edge on the last consecutive pair
    if (chance(50)) {
        int v = addEdge(objectCount - 2, objectCount - 1, -1, "v");
        edges[v].diff.push_back({{spine[objectCount - 2]}, coeff()});
    }

    // skip edges, possibly exact against closed parallel paths
    for (int s = 0; s < objectCount; ++s) {
        for (int d = s + 2; d < objectCount; ++d) {
            if (chance(40)) addEdge(s, d, 0, "z");
            if (chance(60)) {
                int w = addEdge(s, d, -1, "w");
                // targets: closed degree-0 paths s -> d over edges known closed
                std::vector<Path> targets;
                std::vector<std::pair<int, Path>> frontier{{s, {}}};
                while (!frontier.empty()) {
                    auto [at, path] = frontier.back();
                    frontier.pop_back();
                    if (at == d && !path.empty()) {
                        targets.push_back(path);
                        continue;
                    }
                    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
                        if (e == w) continue;
                        if (edges[e].src != at || edges[e].dst > d) continue;
                        if (edges[e].degree != 0 || !edges[e].diff.empty()) continue;
                        Path next = path;
                        next.push_back(e);
                        frontier.push_back({edges[e].dst, next});
                    }
                }
                std::sort(targets.begin(), targets.end());
                for (const auto& t : targets)
                    if (chance(70)) edges[w].diff.push_back({t, coeff()});
            }
        }
    }

    std::vector<std::string> objects;
    for (int i = 0; i < objectCount; ++i) objects.push_back(std::to_string(i));
    auto cat = std::make_shared<FiniteDgCategory>(f, std::move(objects));

    // basis = all nonempty edge paths plus identities
    std::map<Path, BasisId> flatOf;
    auto pathLabel = [&](const Path& p) {
        std::string s;
        for (auto it = p.rbegin(); it != p.rend(); ++it) {
            if (!s.empty()) s += "*";
            s += edges[*it].label;
        }
        return s;
    };
    auto pathDegree = [&](const Path& p) {
        int deg = 0;
        for (int e : p) deg += edges[e].degree;
        return deg;
    };
    std::vector<Path> allPaths;
    {
        std::vector<Path> frontier;
        for (int e = 0; e < static_cast<int>(edges.size()); ++e) frontier.push_back({e});
        while (!frontier.empty()) {
            Path p = frontier.back();
            frontier.pop_back();
            allPaths.push_back(p);
            int at = edges[p.back()].dst;
            for (int e = 0; e < static_cast<int>(edges.size()); ++e)
                if (edges[e].src == at) {
                    Path next = p;
                    next.push_back(e);
                    frontier.push_back(next);
                }
        }
        std::sort(allPaths.begin(), allPaths.end());
    }
    for (const auto& p : allPaths) {
        int src = edges[p.front()].src, dst = edges[p.back()].dst;
        int flat = cat->addBasisElement(src, dst, pathLabel(p), pathDegree(p));
        flatOf[p] = BasisId{src, dst, flat};
    }
    std::vector<BasisId> identities;
    for (int i = 0; i < objectCount; ++i) {
        int flat = cat->addBasisElement(i, i, "id_" + std::to_string(i), 0);
        identities.push_back(BasisId{i, i, flat});
    }

    // differential on a path by the graded Leibniz rule over its edges;
    // edge differentials splice parallel paths in place
    for (const auto& p : allPaths) {
        BasisId from = flatOf.at(p);
        int suffixDeg = 0;  // degree of edges later in composition order
        for (int pos = static_cast<int>(p.size()) - 1; pos >= 0; --pos) {
            const Edge& e = edges[p[pos]];
            FieldScalar sign = FieldScalar::ofInt(f, suffixDeg % 2 == 0 ? 1 : -1);
            for (const auto& [replacement, c] : e.diff) {
                Path q;
                q.insert(q.end(), p.begin(), p.begin() + pos);
                q.insert(q.end(), replacement.begin(), replacement.end());
                q.insert(q.end(), p.begin() + pos + 1, p.end());
                cat->addDifferentialTerm(from, flatOf.at(q), c * sign);
            }
            suffixDeg += e.degree;
        }
    }

    // composition = path concatenation
    for (const auto& p : allPaths) {
        for (const auto& q : allPaths) {
            if (edges[p.back()].dst != edges[q.front()].src) continue;
            Path pq = p;
            pq.insert(pq.end(), q.begin(), q.end());
            auto it = flatOf.find(pq);
            if (it == flatOf.end()) continue;  // unreachable for free paths
            MorCombination r = cat->zeroCombination(flatOf.at(p).src, flatOf.at(q).dst);
            r.addTerm(it->second.flat, FieldScalar::one(f));
            cat->setComposition(flatOf.at(q), flatOf.at(p), std::move(r));
        }
    }
    for (int i = 0; i < objectCount; ++i) cat->setIdentity(i, identities[i]);
    cat->seal();
    return cat;
}

}  // namespace homtwist
