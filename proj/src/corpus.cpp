#include "toricq/corpus.hpp"

namespace toricq::corpus {

namespace {

LatticeVector v(std::initializer_list<std::int64_t> c) { return LatticeVector{std::vector<std::int64_t>(c)}; }

}  // namespace

Fan cp1() { return Fan(1, {v({1}), v({-1})}, {Cone({0}), Cone({1})}); }

Fan cp2() {
    return Fan(2, {v({1, 0}), v({0, 1}), v({-1, -1})}, {Cone({0, 1}), Cone({1, 2}), Cone({0, 2})});
}

Fan cp1xcp1() {
    return Fan(2, {v({1, 0}), v({0, 1}), v({-1, 0}), v({0, -1})},
               {Cone({0, 1}), Cone({1, 2}), Cone({2, 3}), Cone({0, 3})});
}

Fan hirzebruch(int a) {
    return Fan(2, {v({1, 0}), v({0, 1}), v({-1, a}), v({0, -1})},
               {Cone({0, 1}), Cone({1, 2}), Cone({2, 3}), Cone({0, 3})});
}

std::vector<NamedFan> all_fans() {
    std::vector<NamedFan> out{{"cp1", cp1()}, {"cp2", cp2()}, {"cp1xcp1", cp1xcp1()}};
    for (int a = 0; a <= 3; ++a) out.push_back({"h" + std::to_string(a), hirzebruch(a)});
    return out;
}

}  // namespace toricq::corpus
