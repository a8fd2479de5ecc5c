#include "ccn/partitions.hpp"

#include "ccn/errors.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace ccn {

Partition::Partition(std::uint32_t n, std::vector<std::uint32_t> alpha) : n_(n), alpha_(std::move(alpha)) {
    if (n_ == 0) throw DomainError("partition of 0 is not supported");
    if (alpha_.size() != n_) {
        throw DomainError("multiplicity vector has length " + std::to_string(alpha_.size()) + ", expected " +
                          std::to_string(n_));
    }
    std::uint64_t total = 0;
    for (std::uint32_t k = 1; k <= n_; ++k) total += std::uint64_t{k} * alpha_[k - 1];
    if (total != n_) {
        throw DomainError("multiplicities sum to " + std::to_string(total) + ", expected " + std::to_string(n_));
    }
}

Partition Partition::from_parts(const std::vector<std::uint32_t>& parts) {
    std::uint64_t n = 0;
    for (auto p : parts) {
        if (p == 0) throw DomainError("partition parts must be positive");
        n += p;
    }
    if (n == 0) throw DomainError("empty partition");
    if (n > kMaxPartitionSize) throw DomainError("partition size exceeds " + std::to_string(kMaxPartitionSize));
    std::vector<std::uint32_t> alpha(n, 0);
    for (auto p : parts) ++alpha[p - 1];
    return Partition(static_cast<std::uint32_t>(n), std::move(alpha));
}

std::uint32_t Partition::multiplicity(std::uint32_t k) const {
    if (k == 0 || k > n_) throw DomainError("part size " + std::to_string(k) + " out of range");
    return alpha_[k - 1];
}

std::vector<std::uint32_t> Partition::parts() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t k = n_; k >= 1; --k) out.insert(out.end(), alpha_[k - 1], k);
    return out;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '[';
    bool first = true;
    for (std::uint32_t k = 1; k <= n_; ++k) {
        if (alpha_[k - 1] == 0) continue;
        if (!first) os << ' ';
        os << k << '^' << alpha_[k - 1];
        first = false;
    }
    os << ']';
    return os.str();
}

std::vector<Partition> partitions(std::uint32_t n) {
    if (n == 0) throw DomainError("partitions: n must be positive");
    if (n > kMaxPartitionSize) throw DomainError("partitions: n exceeds " + std::to_string(kMaxPartitionSize));

    std::vector<Partition> out;
    std::vector<std::uint32_t> alpha(n, 0);
    // Largest part first, descending, so the output is in decreasing lex order.
    std::function<void(std::uint32_t, std::uint32_t)> fill = [&](std::uint32_t remaining, std::uint32_t max_part) {
        if (remaining == 0) {
            out.emplace_back(n, alpha);
            return;
        }
        for (std::uint32_t part = std::min(remaining, max_part); part >= 1; --part) {
            ++alpha[part - 1];
            fill(remaining - part, part);
            --alpha[part - 1];
        }
    };
    fill(n, n);
    return out;
}

BigInt class_size(const Partition& rho) {
    BigInt denominator = 1;
    for (std::uint32_t k = 1; k <= rho.n(); ++k) {
        const auto a = rho.multiplicity(k);
        if (a == 0) continue;
        denominator *= boost::multiprecision::pow(BigInt(k), a);
        denominator *= factorial(a);
    }
    BigInt quotient, remainder;
    boost::multiprecision::divide_qr(factorial(rho.n()), denominator, quotient, remainder);
    if (remainder != 0) throw InternalError("class size of " + rho.to_string() + " is not an integer");
    return quotient;
}

}  // namespace ccn
