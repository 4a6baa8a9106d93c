#ifndef DSEP_CORPUS_HPP
#define DSEP_CORPUS_HPP

#include "rotation_system.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <string_view>

// Small optimal dual-separable embeddings of complete graphs, K11 and K13..K17
// (there is no K12 entry; c = 11 is still open). Each text is byte-identical to
// data/corpus/<name>.rot; tests/test_corpus.cpp guards against drift.

namespace dsep
{

struct CorpusEntry
{
    std::string_view name;
    std::size_t n;
    std::size_t genus;               // expected genus of the embedding
    std::size_t cutface_length;
    std::string_view note;           // extra non-triangular faces besides the cutface
    std::size_t extra_length;        // 0 if the cutface is the only long face
    std::size_t extra_count;
    std::string_view text;

    RotationSystem load() const {return parse_rotation_system(text);}
};

inline constexpr std::array<CorpusEntry, 6> corpus{{
    {"K11", 11, 7, 17, "", 0, 0, R"(0. 6 1 3 5 2 9 8 10 4 7
1. 6 2 4 3 0 5 10 7 8 9
2. 8 0 5 4 1 7 10 6 9 3
3. 7 5 0 1 4 6 10 8 2 9
4. 9 3 1 2 5 6 8 7 0 10
5. 1 4 2 0 3 8 6 7 9 10
6. 3 0 7 5 8 4 1 9 2 10
7. 2 3 9 5 6 0 4 8 1 10
8. 2 3 10 0 9 1 7 4 6 5
9. 0 4 10 5 7 3 2 6 1 8
10. 0 8 3 6 2 7 1 5 9 4
)"},
    {"K13", 13, 10, 15, "three quadrangular faces", 4, 3, R"(0. 4 1 3 5 2 8 7 10 6 9 11 12
1. 5 2 4 3 0 6 7 12 11 8 9 10
2. 3 0 5 4 1 7 8 12 10 9 6 11
3. 6 5 0 1 4 2 11 9 7 8 10 12
4. 7 3 1 2 5 0 12 8 9 6 10 11
5. 8 4 2 0 3 1 10 7 11 6 12 9
6. 1 3 12 5 11 2 0 10 4 9 8 7
7. 2 4 11 5 10 0 3 9 12 1 6 8
8. 0 5 4 12 2 7 6 9 1 11 10 3
9. 0 2 10 1 8 6 4 5 12 7 3 11
10. 0 7 5 1 9 2 12 3 8 11 4 6
11. 0 9 3 2 6 5 7 4 10 8 1 12
12. 0 11 1 7 9 5 6 3 10 2 8 4
)"},
    {"K14", 14, 12, 17, "a hexagonal face", 6, 1, R"(0. 6 1 3 5 2 4 7 13 12 11 9 10 8
1. 6 2 4 3 0 5 13 8 7 9 11 10 12
2. 7 0 5 4 1 3 11 13 6 8 12 9 10
3. 2 5 0 1 4 8 13 9 7 12 10 6 11
4. 0 3 1 2 5 6 10 13 11 8 9 12 7
5. 1 4 2 0 3 7 8 10 11 9 6 12 13
6. 4 1 12 5 9 0 8 2 13 7 11 3 10
7. 5 2 10 11 6 13 0 4 12 3 9 1 8
8. 3 9 4 11 12 2 6 0 10 5 7 1 13
9. 8 6 5 11 1 7 3 13 10 0 2 12 4
10. 0 9 13 4 6 3 12 1 11 7 2 5 8
11. 0 12 8 4 13 2 3 6 7 10 1 9 5
12. 0 13 5 6 1 10 3 7 4 9 2 8 11
13. 0 7 6 2 11 4 10 9 3 8 1 5 12
)"},
    {"K15", 15, 13, 15, "", 0, 0, R"(0. 8 1 3 5 2 4 10 13 12 9 6 11 14 7
1. 6 2 4 3 0 5 13 7 9 14 8 12 10 11
2. 7 0 5 4 1 3 6 10 12 14 9 8 13 11
3. 2 5 0 1 4 8 9 11 13 10 14 12 7 6
4. 0 3 1 2 5 6 14 11 8 7 12 13 9 10
5. 1 4 2 0 3 7 14 10 8 11 12 6 9 13
6. 4 1 11 0 9 5 12 8 10 2 3 7 13 14
7. 5 2 11 10 9 1 13 6 3 12 4 8 0 14
8. 3 0 7 4 11 5 10 6 12 1 14 13 2 9
9. 0 12 11 3 8 2 14 1 7 10 4 13 5 6
10. 0 4 9 7 11 1 12 2 6 8 5 14 3 13
11. 0 6 1 10 7 2 13 3 9 12 5 8 4 14
12. 0 13 4 7 3 14 2 10 1 8 6 5 11 9
13. 0 10 3 11 2 8 14 6 7 1 5 9 4 12
14. 0 11 4 6 13 8 1 9 2 12 3 10 5 7
)"},
    {"K16", 16, 15, 15, "", 0, 0, R"(0. 8 1 3 5 2 4 13 14 10 6 11 7 12 9 15
1. 6 2 4 3 0 5 10 8 13 9 12 15 11 14 7
2. 7 0 5 4 1 3 9 13 11 15 14 6 12 8 10
3. 2 5 0 1 4 8 14 11 12 6 13 10 15 7 9
4. 0 3 1 2 5 6 10 11 9 14 12 7 8 15 13
5. 1 4 2 0 3 7 11 13 6 9 8 12 14 15 10
6. 4 1 7 15 9 5 13 3 12 2 14 8 11 0 10
7. 5 2 10 9 3 15 6 1 14 13 8 4 12 0 11
8. 3 0 15 4 7 13 1 10 2 12 5 9 11 6 14
9. 0 12 1 13 2 3 7 10 14 4 11 8 5 6 15
10. 0 14 9 7 2 8 1 5 15 3 13 12 11 4 6
11. 0 6 8 9 4 10 12 3 14 1 15 2 13 5 7
12. 0 7 4 14 5 8 2 6 3 11 10 13 15 1 9
13. 0 4 15 12 10 3 6 5 11 2 9 1 8 7 14
14. 0 13 7 1 11 3 8 6 2 15 5 12 4 9 10
15. 0 9 6 7 3 10 5 14 2 11 1 12 13 4 8
)"},
    {"K17", 17, 18, 17, "a hexagonal face", 6, 1, R"(0. 6 1 3 5 2 4 14 10 13 12 11 9 16 15 7 8
1. 6 2 4 3 0 5 11 15 14 8 7 10 9 12 16 13
2. 7 0 5 4 1 3 12 6 16 8 9 10 15 13 14 11
3. 2 5 0 1 4 8 11 9 6 14 13 16 7 15 10 12
4. 0 3 1 2 5 6 15 16 12 7 9 10 8 13 11 14
5. 1 4 2 0 3 7 12 13 8 16 9 14 15 6 10 11
6. 4 1 13 7 11 16 2 12 14 3 9 0 8 10 5 15
7. 5 2 11 6 13 10 1 8 0 15 3 16 14 9 4 12
8. 3 9 2 16 5 13 4 10 6 0 7 1 14 12 15 11
9. 8 6 3 11 13 15 12 1 10 4 7 14 5 16 0 2
10. 0 14 16 11 12 3 15 2 5 6 8 4 9 1 7 13
11. 0 12 10 16 6 7 2 14 4 13 9 3 8 15 1 5
12. 0 13 5 7 4 16 1 9 15 8 14 6 2 3 10 11
13. 0 10 7 6 1 16 3 14 2 15 9 11 4 8 5 12
14. 0 4 11 2 13 3 6 12 8 1 15 5 9 7 16 10
15. 0 16 4 6 5 14 1 11 8 12 9 13 2 10 3 7
16. 0 9 5 8 2 6 11 10 14 7 3 13 1 12 4 15
)"},
}};

inline std::optional<CorpusEntry> find_corpus(std::string_view name)
{
    const auto it = std::find_if(corpus.begin(), corpus.end(), [&](const CorpusEntry& e) {return e.name == name;});
    if(it == corpus.end()) {return std::nullopt;}
    return *it;
}

} // dsep
#endif // DSEP_CORPUS_HPP
