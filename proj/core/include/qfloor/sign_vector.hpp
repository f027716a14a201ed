#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qfloor {

// Length-N vector over {-1,+1}; entry i is +1 iff signal source i is heard.
class SignVector {
public:
    SignVector() = default;
    explicit SignVector(std::vector<std::int8_t> entries);

    // Parses a comma-separated literal such as "1,1,-1,1".
    static SignVector parse(const std::string& text);
    // Parses a "+-+-" style bitstring (the on-disk fingerprint encoding).
    static SignVector from_bitstring(const std::string& bits);
    static SignVector all_heard(std::size_t n);

    std::size_t size() const { return entries_.size(); }
    int operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<std::int8_t>& entries() const { return entries_; }

    bool has_power_of_two_length() const;
    // log2(size()); requires a power-of-two length >= 2.
    int num_qubits() const;

    SignVector negated() const;

    bool operator==(const SignVector&) const = default;

private:
    std::vector<std::int8_t> entries_;
};

struct CanonicalSignVector {
    SignVector vector;
    int global_sign = +1;
};

// Flips the whole vector when entry 0 is -1 so the |0...0> amplitude of the
// encoded state is positive. The recorded global sign is unobservable in any
// measured probability.
CanonicalSignVector canonicalize(const SignVector& v);

// Appends "never heard" (-1) entries up to the next power of two (minimum 2).
SignVector pad_to_power_of_two(const SignVector& v);
// Same padding applied to an AP ordering; pad slots get reserved "PAD<k>" ids.
std::vector<std::string> pad_to_power_of_two(std::vector<std::string> ap_order);

std::string to_bitstring(const SignVector& v);

}  // namespace qfloor
