#include "ellcob/partition.hpp"

namespace ellcob {

namespace {
void gen(int n, int maxp, std::vector<int>& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(n, maxp); p >= 1; --p) {
        cur.push_back(p);
        gen(n - p, p, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::domain_error("partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<int> cur;
    gen(n, n, cur, out);
    return out;
}

long partition_count(int n) {
    if (n < 0) throw std::domain_error("partition_count: negative n");
    std::vector<long> p(n + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        long acc = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2;
            int g2 = k * (3 * k + 1) / 2;
            if (g1 > m && g2 > m) break;
            long sign = (k % 2) ? 1 : -1;
            if (g1 <= m) acc += sign * p[m - g1];
            if (g2 <= m) acc += sign * p[m - g2];
        }
        p[m] = acc;
    }
    return p[n];
}

}  // namespace ellcob
