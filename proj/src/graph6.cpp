#include "spheretri/graph6.hpp"

namespace spheretri {

std::string encode_graph6(const Triangulation& t) {
    const int n = t.n();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        // three-byte extended size, good through n = 258047
        out.push_back('~');
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    // upper triangle, column by column, packed 6 bits per printable byte
    int bits = 0;
    int value = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            value = (value << 1) | (t.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(63 + value));
                bits = 0;
                value = 0;
            }
        }
    if (bits > 0) out.push_back(static_cast<char>(63 + (value << (6 - bits))));
    return out;
}

} // namespace spheretri
