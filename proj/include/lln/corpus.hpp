#pragma once

// The built-in corpus of known solutions to a*x^2 + b^(2l) = 4*y^n for a in
// the class-number-one special set.  Two groups:
//
//   CongruentExamples:  solutions with 2^(n-1) * b^l = +-1 (mod a) for one
//                       sign of b -- the congruence hypothesis fails, so the
//                       no-solution theorems cannot apply to them.
//   CompositeBExamples: solutions whose b has at least two distinct odd prime
//                       factors -- the prime-power hypothesis fails instead,
//                       and the residues stay outside {+-1}.
//
// Every entry is equation-verified at construction; the data mirrors
// data/corpus.tsv.

#include "lln/search.hpp"

#include <vector>

namespace lln {

enum class CorpusGroup { CongruentExamples, CompositeBExamples };

struct CorpusEntry {
    SolutionTuple tuple;
    CorpusGroup group;
};

inline const std::vector<CorpusEntry>& builtin_corpus() {
    static const std::vector<CorpusEntry> corpus = [] {
        auto t = [](long long a, long long x, long long y, long long b, long long l, long long n) {
            return SolutionTuple(Int(a), Int(x), Int(y), Int(b), Int(l), Int(n));
        };
        std::vector<CorpusEntry> c;
        c.push_back({t(7, 1, 2, 11, 1, 5), CorpusGroup::CongruentExamples});
        c.push_back({t(11, 1, 3, 31, 1, 5), CorpusGroup::CongruentExamples});
        c.push_back({t(7, 7, 2, 13, 1, 7), CorpusGroup::CongruentExamples});
        c.push_back({t(19, 1, 5, 559, 1, 7), CorpusGroup::CongruentExamples});
        c.push_back({t(11, 253, 3, 67, 1, 11), CorpusGroup::CongruentExamples});
        c.push_back({t(19, 2531, 5, 8579, 1, 11), CorpusGroup::CongruentExamples});
        c.push_back({t(7, 1, 2, 181, 1, 13), CorpusGroup::CongruentExamples});
        c.push_back({t(11, 1801, 3, 21929, 1, 17), CorpusGroup::CongruentExamples});
        c.push_back({t(7, 457, 2, 797, 1, 19), CorpusGroup::CongruentExamples});
        c.push_back({t(7, 967, 2, 5197, 1, 23), CorpusGroup::CongruentExamples});
        c.push_back({t(7, 103820535541LL, 4, 10341108537LL, 1, 37), CorpusGroup::CompositeBExamples});
        c.push_back({t(7, 4865, 46, 1320267, 1, 7), CorpusGroup::CompositeBExamples});
        c.push_back({t(19, 315003, 49, 909715, 1, 7), CorpusGroup::CompositeBExamples});
        c.push_back({t(19, 581072253, 49, 3037108805LL, 1, 11), CorpusGroup::CompositeBExamples});
        return c;
    }();
    return corpus;
}

// Entries from one group, optionally restricted to a given coefficient a.
inline std::vector<SolutionTuple> corpus_examples(CorpusGroup group, const Int* a = nullptr) {
    std::vector<SolutionTuple> out;
    for (const auto& e : builtin_corpus()) {
        if (e.group != group) continue;
        if (a && e.tuple.a != *a) continue;
        out.push_back(e.tuple);
    }
    return out;
}

}  // namespace lln
