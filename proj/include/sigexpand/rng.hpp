#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace sigx {

// Counter-based generator (Philox 4x32, 10 rounds). Every (path, step,
// substream) owns an independent stream addressed purely by its counter,
// so draws never depend on thread scheduling or evaluation order.
inline std::array<uint32_t, 4> philox4x32(std::array<uint32_t, 4> x, uint32_t k0, uint32_t k1) {
    constexpr uint32_t M0 = 0xD2511F53u, M1 = 0xCD9E8D57u;
    constexpr uint32_t W0 = 0x9E3779B9u, W1 = 0xBB67AE85u;
    for (int r = 0; r < 10; ++r) {
        uint64_t p0 = (uint64_t)M0 * x[0];
        uint64_t p1 = (uint64_t)M1 * x[2];
        x = {(uint32_t)(p1 >> 32) ^ x[1] ^ k0, (uint32_t)p1,
             (uint32_t)(p0 >> 32) ^ x[3] ^ k1, (uint32_t)p0};
        k0 += W0;
        k1 += W1;
    }
    return x;
}

// Sequential uniforms on (0,1) for one (path, step, substream) triple.
// Each block yields two 53-bit doubles, consumed lowest lane first.
class UniformStream {
  public:
    UniformStream(uint64_t seed, uint32_t path, uint32_t step, uint32_t substream)
        : k0_((uint32_t)seed), k1_((uint32_t)(seed >> 32)), path_(path), step_(step), sub_(substream) {}

    double next() {
        if (pos_ == 2) {
            auto r = philox4x32({path_, step_, sub_, block_++}, k0_, k1_);
            buf_[0] = to_unit(((uint64_t)r[0] << 32) | r[1]);
            buf_[1] = to_unit(((uint64_t)r[2] << 32) | r[3]);
            pos_ = 0;
        }
        return buf_[pos_++];
    }

  private:
    static double to_unit(uint64_t v) { return ((double)(v >> 11) + 0.5) * 0x1.0p-53; }
    uint32_t k0_, k1_, path_, step_, sub_;
    uint32_t block_ = 0;
    int pos_ = 2;
    double buf_[2] = {0, 0};
};

// Standard normals by Box-Muller on top of a uniform stream.
class NormalStream {
  public:
    explicit NormalStream(UniformStream u) : u_(u) {}

    double next() {
        if (!have_) {
            double r = std::sqrt(-2.0 * std::log(u_.next()));
            double th = 6.283185307179586476925287 * u_.next();
            val_ = r * std::sin(th);
            have_ = true;
            return r * std::cos(th);
        }
        have_ = false;
        return val_;
    }

  private:
    UniformStream u_;
    bool have_ = false;
    double val_ = 0;
};

// Poisson count by inverse-product search; fine for the small step
// intensities this harness uses. Consumes from the caller's stream so
// jump-size draws continue the same sequence.
inline int poisson_knuth(UniformStream& u, double mean) {
    double limit = std::exp(-mean);
    int k = 0;
    double p = 1.0;
    do {
        ++k;
        p *= u.next();
    } while (p > limit);
    return k - 1;
}

}  // namespace sigx
