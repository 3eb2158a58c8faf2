#include "wavedisp/reference_tables.hpp"

namespace wavedisp::reference {

namespace {

constexpr std::array<DispersionTableRow, 15> kTable1{{
    {100, 100, 0.1, {0.01645, 0.04747}, {0.01646, 0.1121}},
    {100, 100, 0.01, {0.01645, 0.04934}, {0.01646, 0.1153}},
    {100, 100, 0.001, {0.01645, 0.04936}, {0.01669, 0.1158}},
    {50, 50, 0.1, {0.06582, 0.1900}, {0.06592, 0.4500}},
    {50, 50, 0.01, {0.06582, 0.1975}, {0.06593, 0.4627}},
    {50, 50, 0.001, {0.06582, 0.1976}, {0.06592, 0.4628}},
    {25, 25, 0.1, {0.2635, 0.7620}, {0.2652, 1.825}},
    {25, 25, 0.01, {0.2635, 0.7924}, {0.2654, 1.878}},
    {25, 25, 0.001, {0.2635, 0.7927}, {0.2654, 1.878}},
    {20, 20, 0.1, {0.4119, 1.193}, {0.4161, 2.883}},
    {20, 20, 0.01, {0.4121, 1.241}, {0.4166, 2.967}},
    {20, 20, 0.001, {0.4121, 1.241}, {0.4166, 2.968}},
    {10, 10, 0.1, {1.657, 4.857}, {1.731, 12.68}},
    {10, 10, 0.01, {1.660, 5.065}, {1.740, 13.10}},
    {10, 10, 0.001, {1.660, 5.967}, {1.740, 13.10}},
}};

constexpr std::array<DispersionTableRow, 8> kTable2{{
    {100, 50, 0, {-0.030002, 0.09405}, {-0.1265, 0.2561}},
    {50, 100, 0, {0.1123, 0.1434}, {0.2094, 0.3054}},
    {50, 25, 0, {-0.1195, 0.3772}, {-0.5021, 1.034}},
    {25, 50, 0, {0.4495, 0.574}, {0.8419, 1.232}},
    {20, 10, 0, {-0.7238, 2.403}, {-2.971, 6.944}},
    {10, 20, 0, {2.818, 3.617}, {5.453, 8.176}},
    {10, 5, 0, {-2.566, 10.42}, {-9.724, 38.43}},
    {5, 10, 0, {11.39, 14.93}, {24.98, 41.88}},
}};

constexpr std::array<ReflectionTableRow, 18> kTable3{{
    {100, 0.5, 200, {1.845, 1.845}},
    {100, 0.7, 142.9, {1.397, 1.397}},
    {100, 0.9, 111.1, {0.5740, 0.5753}},
    {100, 1.1, 90.91, {0.6966, 0.6937}},
    {100, 1.5, 66.67, {4.868, 4.860}},
    {100, 2.0, 50, {13.67, 13.65}},
    {50, 0.5, 100, {3.704, 3.705}},
    {50, 0.7, 71.35, {2.798, 2.803}},
    {50, 0.9, 55.56, {1.151, 1.163}},
    {50, 1.1, 45.45, {1.392, 1.371}},
    {50, 1.5, 33.33, {9.605, 9.548}},
    {50, 2.0, 25, {25.86, 25.72}},
    {10, 0.5, 20, {19.26, 20.10}},
    {10, 0.7, 14.29, {14.39, 15.55}},
    {10, 0.9, 11.11, {5.738, 7.542}},
    {10, 1.1, 9.091, {6.678, 4.080}},
    {10, 1.5, 6.667, {37.51, 33.08}},
    {10, 2.0, 5.000, {66.34, 61.66}},
}};

}  // namespace

std::span<const DispersionTableRow> table1() { return kTable1; }
std::span<const DispersionTableRow> table2() { return kTable2; }
std::span<const ReflectionTableRow> table3() { return kTable3; }

}  // namespace wavedisp::reference
