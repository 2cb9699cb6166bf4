#ifndef DISPSIM_PARALLEL_HPP
#define DISPSIM_PARALLEL_HPP

#include <exception>
#include <thread>
#include <vector>

namespace dispsim {

/// Runs fn(begin, end) over fixed contiguous chunks of [begin, end), one
/// worker thread per chunk. Chunk boundaries depend only on the range and
/// worker count, and every index is processed exactly once, so results are
/// identical for any worker count as long as fn writes disjoint outputs.
/// The first thrown exception is rethrown on the calling thread.
template <class Fn>
void parallel_chunks(int begin, int end, int workers, Fn&& fn) {
    const int count = end - begin;
    if (count <= 0)
        return;
    if (workers <= 1 || count == 1) {
        fn(begin, end);
        return;
    }
    if (workers > count)
        workers = count;
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<size_t>(workers));
    pool.reserve(static_cast<size_t>(workers));
    for (int k = 0; k < workers; ++k) {
        const int b = begin + static_cast<int>(static_cast<long long>(count) * k / workers);
        const int e = begin + static_cast<int>(static_cast<long long>(count) * (k + 1) / workers);
        pool.emplace_back([&, b, e, k] {
            try {
                fn(b, e);
            } catch (...) {
                errors[static_cast<size_t>(k)] = std::current_exception();
            }
        });
    }
    for (auto& t : pool)
        t.join();
    for (auto& err : errors)
        if (err)
            std::rethrow_exception(err);
}

} // namespace dispsim

#endif
