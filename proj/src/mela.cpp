#include <setgraph/error.hpp>
#include <setgraph/mela.hpp>

#include <bit>

using std::string;
using std::to_string;
using std::uint64_t;

namespace setgraph
{
    auto mela(unsigned k) -> MelaSequence
    {
        if (k < 1 || k > max_mela_index)
            throw RangeError("Mela index " + to_string(k) + " outside 1.." + to_string(max_mela_index));
        MelaSequence seq;
        seq.values.push_back(1);
        while (seq.values.size() < k)
            seq.values.push_back(2 * seq.values.back() + 1);
        return seq;
    }

    auto is_mela(uint64_t x) -> bool
    {
        return x != 0 && x != ~uint64_t{0} && std::has_single_bit(x + 1);
    }

    auto describe(const MelaFailure & f) -> string
    {
        auto mi = "m_" + to_string(f.i), mj = "m_" + to_string(f.j);
        if (f.relation == "sum")
            return mi + " + " + mj + " = " + to_string(f.value) + " is a Mela number";
        if (f.relation == "product")
            return mi + " * " + mj + " = " + to_string(f.value) + " is a Mela number";
        if (f.relation == "difference")
            return mi + " - " + mj + " = " + to_string(f.value) + " is a Mela number";
        if (f.relation == "divides")
            return "m_" + to_string(f.i) + " does not divide m_" + to_string(f.i * f.j) + " (remainder " + to_string(f.value) + ")";
        return "m_" + to_string(f.i * f.j) + " / m_" + to_string(f.i) + " = " + to_string(f.value) + " is a Mela number";
    }

    auto check_closure(unsigned max_index) -> MelaCheck
    {
        if (max_index < 1 || max_index > max_closure_index)
            throw RangeError("closure check index " + to_string(max_index) + " outside 1.." + to_string(max_closure_index));
        auto seq = mela(max_index);
        MelaCheck result;

        auto record = [&] (unsigned i, unsigned j, const char * relation, uint64_t value) {
            MelaFailure f{i, j, relation, value};
            if (! result.degenerate_failure)
                result.degenerate_failure = f;
            if (i >= 2 && j >= 2 && ! result.failure)
                result.failure = f;
        };

        for (unsigned i = 1; i <= max_index; ++i)
            for (unsigned j = 1; j <= max_index; ++j) {
                auto a = seq.at(i), b = seq.at(j);
                ++result.cases;
                if (is_mela(a + b))
                    record(i, j, "sum", a + b);
                if (is_mela(a * b))
                    record(i, j, "product", a * b);
                if (a > b && is_mela(a - b))
                    record(i, j, "difference", a - b);
            }

        if (result.degenerate_failure)
            result.notes.push_back("with index 1 admitted: " + describe(*result.degenerate_failure)
                    + " (m_1 = 1 is the multiplicative identity)");
        return result;
    }

    auto check_divisibility(unsigned max_i, unsigned max_k) -> MelaCheck
    {
        if (max_i < 1 || max_k < 1)
            throw RangeError("divisibility check needs indices >= 1");
        if (max_i > max_mela_index || max_k > max_mela_index)
            throw RangeError("divisibility check indices limited to " + to_string(max_mela_index));

        auto seq = mela(max_mela_index);
        MelaCheck result;
        uint64_t skipped = 0;
        for (unsigned i = 1; i <= max_i; ++i)
            for (unsigned k = 1; k <= max_k; ++k) {
                if (i * k > max_mela_index) {
                    ++skipped;
                    continue;
                }
                ++result.cases;
                auto big = seq.at(i * k), small = seq.at(i);
                MelaFailure f{i, k, "", 0};
                if (big % small != 0)
                    f = {i, k, "divides", big % small};
                else if (is_mela(big / small))
                    f = {i, k, "quotient", big / small};
                else
                    continue;
                if (! result.degenerate_failure)
                    result.degenerate_failure = f;
                if (i >= 2 && k >= 2 && ! result.failure)
                    result.failure = f;
            }

        if (result.degenerate_failure)
            result.notes.push_back("with i = 1 or k = 1 admitted: " + describe(*result.degenerate_failure)
                    + " (m_k / m_1 = m_k and m_i / m_i = 1 are trivially Mela numbers)");
        if (skipped > 0)
            result.notes.push_back(to_string(skipped) + " pairs with i*k > " + to_string(max_mela_index) + " skipped (exactness cap)");
        return result;
    }
}
