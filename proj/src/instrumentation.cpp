#include "idsdvbs/instrumentation.hpp"

namespace idsdvbs {

namespace {
thread_local OpCounter* active_counter = nullptr;
}

OpCounts& OpCounts::operator+=(const OpCounts& o)
{
    g1_scalar_mul += o.g1_scalar_mul;
    g1_add += o.g1_add;
    g2_exp += o.g2_exp;
    g2_mul += o.g2_mul;
    pairing += o.pairing;
    map_to_point += o.map_to_point;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const OpCounts& c)
{
    return os << "{g1_scalar_mul=" << c.g1_scalar_mul << ", g1_add=" << c.g1_add << ", g2_exp=" << c.g2_exp
              << ", g2_mul=" << c.g2_mul << ", pairing=" << c.pairing << ", map_to_point=" << c.map_to_point
              << "}";
}

void OpCounter::record(OpKind kind) noexcept
{
    switch (kind) {
    case OpKind::G1ScalarMul: ++counts_.g1_scalar_mul; break;
    case OpKind::G1Add: ++counts_.g1_add; break;
    case OpKind::G2Exp: ++counts_.g2_exp; break;
    case OpKind::G2Mul: ++counts_.g2_mul; break;
    case OpKind::Pairing: ++counts_.pairing; break;
    case OpKind::MapToPoint: ++counts_.map_to_point; break;
    }
}

CountingRegion::CountingRegion(OpCounter& counter) noexcept : previous_(active_counter)
{
    active_counter = &counter;
}

CountingRegion::~CountingRegion()
{
    active_counter = previous_;
}

void record_op(OpKind kind) noexcept
{
    if (active_counter != nullptr)
        active_counter->record(kind);
}

}  // namespace idsdvbs
