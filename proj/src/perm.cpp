#include "dpc/perm.hpp"

#include <algorithm>

namespace dpc {

Perm Perm::identity(int k) {
    if (k < 1 || k > 4) fail(ErrorKind::BadK, "permutation arity must be in 1..4, got " + std::to_string(k));
    Perm p;
    p.k_ = k;
    for (int i = 0; i < k; ++i) p.img_[i] = static_cast<std::uint8_t>(i + 1);
    return p;
}

Perm Perm::from_word(std::string_view word) {
    int k = static_cast<int>(word.size());
    Perm p = identity(k);
    std::array<bool, 4> seen{};
    for (int i = 0; i < k; ++i) {
        char c = word[i];
        if (c < '1' || c > '0' + k)
            fail(ErrorKind::ParseError, "bad permutation word '" + std::string(word) + "'");
        int v = c - '0';
        if (seen[v - 1]) fail(ErrorKind::ParseError, "word '" + std::string(word) + "' is not a bijection");
        seen[v - 1] = true;
        p.img_[i] = static_cast<std::uint8_t>(v);
    }
    return p;
}

Perm Perm::transposition(int k, int a, int b) {
    Perm p = identity(k);
    std::swap(p.img_[a - 1], p.img_[b - 1]);
    return p;
}

Perm Perm::compose(const Perm& g) const {
    if (k_ != g.k_) fail(ErrorKind::WrongArity, "composing permutations of different arity");
    Perm r = identity(k_);
    for (int c = 1; c <= k_; ++c) r.img_[c - 1] = static_cast<std::uint8_t>(apply(g.apply(c)));
    return r;
}

Perm Perm::inverse() const {
    Perm r = identity(k_);
    for (int c = 1; c <= k_; ++c) r.img_[img_[c - 1] - 1] = static_cast<std::uint8_t>(c);
    return r;
}

bool Perm::is_identity() const {
    for (int i = 0; i < k_; ++i)
        if (img_[i] != i + 1) return false;
    return true;
}

std::string Perm::word() const {
    std::string s;
    for (int i = 0; i < k_; ++i) s.push_back(static_cast<char>('0' + img_[i]));
    return s;
}

int Perm::factorial(int k) {
    int f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

int Perm::rank() const {
    // Lehmer code.
    int r = 0;
    for (int i = 0; i < k_; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < k_; ++j)
            if (img_[j] < img_[i]) ++smaller;
        r = r * (k_ - i) + smaller;
    }
    return r;
}

Perm Perm::unrank(int k, int r) {
    if (r < 0 || r >= factorial(k)) fail(ErrorKind::OutOfDomain, "permutation rank out of range");
    std::array<int, 4> avail{};
    for (int i = 0; i < k; ++i) avail[i] = i + 1;
    int n = k;
    Perm p = identity(k);
    for (int i = 0; i < k; ++i) {
        int f = factorial(k - 1 - i);
        int idx = r / f;
        r %= f;
        p.img_[i] = static_cast<std::uint8_t>(avail[idx]);
        for (int j = idx; j < n - 1; ++j) avail[j] = avail[j + 1];
        --n;
    }
    return p;
}

const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::InconsistentRotation: return "InconsistentRotation";
        case ErrorKind::LoopOrMultiEdge: return "LoopOrMultiEdge";
        case ErrorKind::DisconnectedWhenRequired: return "DisconnectedWhenRequired";
        case ErrorKind::UnknownVertex: return "UnknownVertex";
        case ErrorKind::NotACycle: return "NotACycle";
        case ErrorKind::BasepointNotOnCycle: return "BasepointNotOnCycle";
        case ErrorKind::CycleTooLong: return "CycleTooLong";
        case ErrorKind::WrongArity: return "WrongArity";
        case ErrorKind::Disconnected: return "Disconnected";
        case ErrorKind::PrecoloringConflict: return "PrecoloringConflict";
        case ErrorKind::BadK: return "BadK";
        case ErrorKind::BoundaryNotCycle: return "BoundaryNotCycle";
        case ErrorKind::BoundaryNotGood: return "BoundaryNotGood";
        case ErrorKind::BadPrecoloring: return "BadPrecoloring";
        case ErrorKind::NotInClassG: return "NotInClassG";
        case ErrorKind::WouldMergeEdges: return "WouldMergeEdges";
        case ErrorKind::WouldCreateLoop: return "WouldCreateLoop";
        case ErrorKind::NotInternal: return "NotInternal";
        case ErrorKind::BadSlot: return "BadSlot";
        case ErrorKind::OutOfDomain: return "OutOfDomain";
        case ErrorKind::LedgerMissing: return "LedgerMissing";
        case ErrorKind::PreconditionFailed: return "PreconditionFailed";
        case ErrorKind::AttemptsExhausted: return "AttemptsExhausted";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "UnknownError";
}

} // namespace dpc
