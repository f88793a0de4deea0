#include "sprod/randgen.hpp"

namespace sprod {

int RandomRationals::integer(int lo, int hi) {
    // explicit arithmetic so the stream does not depend on the library's distribution
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(rng_() % span);
}

Rat RandomRationals::any() {
    static const long dens[3] = {1, 2, 3};
    long p = integer(-20, 20);
    long q = dens[integer(0, 2)];
    return Rat(p, q);
}

Rat RandomRationals::fresh() {
    for (int attempt = 0; attempt < 100000; ++attempt) {
        Rat x = any();
        bool ok = true;
        for (const auto& y : pool_) {
            Rat d = x - y;
            if (d.is_zero() || d == Rat(1) || d == Rat(-1)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            pool_.push_back(x);
            return x;
        }
    }
    throw Error(ErrorKind::NoConvergence, "random pool exhausted");
}

std::vector<Rat> RandomRationals::fresh(int n) {
    std::vector<Rat> out;
    for (int i = 0; i < n; ++i) out.push_back(fresh());
    return out;
}

} // namespace sprod
