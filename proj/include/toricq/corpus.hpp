#pragma once

// Small toric fans used by the tests, the acceptance suite and the data/corpus files.

#include "toricq/fan.hpp"

#include <string>
#include <vector>

namespace toricq::corpus {

Fan cp1();
Fan cp2();
Fan cp1xcp1();
/// Hirzebruch surface H_a: rays (1,0), (0,1), (-1,a), (0,-1), cones in cyclic order.
Fan hirzebruch(int a);

struct NamedFan {
    std::string name;
    Fan fan;
};

/// cp1, cp2, cp1xcp1, h0..h3.
std::vector<NamedFan> all_fans();

}  // namespace toricq::corpus
