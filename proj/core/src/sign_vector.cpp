#include "qfloor/sign_vector.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace qfloor {

SignVector::SignVector(std::vector<std::int8_t> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) {
        throw std::invalid_argument("sign vector must be non-empty");
    }
    for (auto e : entries_) {
        if (e != 1 && e != -1) {
            throw std::invalid_argument("sign vector entries must be +1 or -1, got " +
                                        std::to_string(int(e)));
        }
    }
}

SignVector SignVector::parse(const std::string& text) {
    std::vector<std::int8_t> entries;
    std::stringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        if (token == "1" || token == "+1") {
            entries.push_back(1);
        } else if (token == "-1") {
            entries.push_back(-1);
        } else {
            throw std::invalid_argument("bad sign vector entry '" + token + "' in '" + text +
                                        "'");
        }
    }
    return SignVector(std::move(entries));
}

SignVector SignVector::from_bitstring(const std::string& bits) {
    std::vector<std::int8_t> entries;
    entries.reserve(bits.size());
    for (char c : bits) {
        if (c == '+') {
            entries.push_back(1);
        } else if (c == '-') {
            entries.push_back(-1);
        } else {
            throw std::invalid_argument(std::string("bad bitstring character '") + c + "'");
        }
    }
    return SignVector(std::move(entries));
}

SignVector SignVector::all_heard(std::size_t n) {
    return SignVector(std::vector<std::int8_t>(n, 1));
}

bool SignVector::has_power_of_two_length() const {
    return size() >= 2 && std::has_single_bit(size());
}

int SignVector::num_qubits() const {
    if (!has_power_of_two_length()) {
        throw std::invalid_argument("sign vector length " + std::to_string(size()) +
                                    " is not a power of two >= 2");
    }
    return std::bit_width(size()) - 1;
}

SignVector SignVector::negated() const {
    auto flipped = entries_;
    for (auto& e : flipped) e = -e;
    return SignVector(std::move(flipped));
}

CanonicalSignVector canonicalize(const SignVector& v) {
    if (v[0] == 1) {
        return {v, +1};
    }
    return {v.negated(), -1};
}

SignVector pad_to_power_of_two(const SignVector& v) {
    std::size_t target = 2;
    while (target < v.size()) target <<= 1;
    if (target == v.size()) {
        return v;
    }
    auto entries = v.entries();
    entries.resize(target, -1);
    return SignVector(std::move(entries));
}

std::vector<std::string> pad_to_power_of_two(std::vector<std::string> ap_order) {
    std::size_t target = 2;
    while (target < ap_order.size()) target <<= 1;
    for (std::size_t k = ap_order.size(); k < target; ++k) {
        ap_order.push_back("PAD" + std::to_string(k));
    }
    return ap_order;
}

std::string to_bitstring(const SignVector& v) {
    std::string bits(v.size(), '+');
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0) bits[i] = '-';
    }
    return bits;
}

}  // namespace qfloor
