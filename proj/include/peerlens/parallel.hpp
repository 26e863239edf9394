#pragma once

#include <atomic>
#include <condition_variable>
#include <cstddef>
#include <map>
#include <mutex>
#include <thread>
#include <vector>

namespace peerlens {

inline int default_workers() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : static_cast<int>(n);
}

// Runs fn(block_index, begin, end) over [0, n) split into fixed-size blocks.
// Workers pull blocks from an atomic counter; callers that need ordered
// output collect per-block buffers (indexed by block_index) and merge them
// afterwards, so results never depend on the worker count.
template <typename Fn>
void parallel_blocks(std::size_t n, std::size_t block_size, int workers, Fn&& fn) {
    if (n == 0) return;
    if (block_size == 0) block_size = 1;
    const std::size_t n_blocks = (n + block_size - 1) / block_size;
    if (workers <= 1 || n_blocks == 1) {
        for (std::size_t b = 0; b < n_blocks; ++b) {
            const std::size_t begin = b * block_size;
            const std::size_t end = std::min(n, begin + block_size);
            fn(b, begin, end);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (;;) {
            const std::size_t b = next.fetch_add(1);
            if (b >= n_blocks) return;
            const std::size_t begin = b * block_size;
            const std::size_t end = std::min(n, begin + block_size);
            fn(b, begin, end);
        }
    };
    std::vector<std::thread> pool;
    const std::size_t n_threads =
        std::min<std::size_t>(static_cast<std::size_t>(workers), n_blocks);
    pool.reserve(n_threads);
    for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
}

// Produce/consume pipeline for streamed output: produce(block) runs on the
// worker pool, consume(block, buffer) runs on the calling thread in strict
// block order. Backpressure keeps at most ~2x workers buffers in flight, so
// arbitrarily large pair tables stream to disk without accumulating in
// memory. Output bytes depend only on the block order, never on the worker
// count.
template <typename Buffer, typename Produce, typename Consume>
void ordered_blocks(std::size_t n_blocks, int workers, Produce&& produce,
                    Consume&& consume) {
    if (n_blocks == 0) return;
    if (workers <= 1) {
        for (std::size_t b = 0; b < n_blocks; ++b) consume(b, produce(b));
        return;
    }
    std::mutex mu;
    std::condition_variable ready_cv;   // consumer waits for the next block
    std::condition_variable space_cv;   // producers wait for buffer space
    std::map<std::size_t, Buffer> done;
    std::atomic<std::size_t> next{0};
    std::size_t consumed = 0;
    const std::size_t cap = static_cast<std::size_t>(workers) * 2;

    auto work = [&] {
        for (;;) {
            const std::size_t b = next.fetch_add(1);
            if (b >= n_blocks) return;
            Buffer buffer = produce(b);
            std::unique_lock lock(mu);
            space_cv.wait(lock, [&] { return done.size() < cap || b == consumed; });
            done.emplace(b, std::move(buffer));
            ready_cv.notify_all();
        }
    };
    std::vector<std::thread> pool;
    const std::size_t n_threads =
        std::min<std::size_t>(static_cast<std::size_t>(workers), n_blocks);
    pool.reserve(n_threads);
    for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(work);

    for (std::size_t b = 0; b < n_blocks; ++b) {
        Buffer buffer;
        {
            std::unique_lock lock(mu);
            ready_cv.wait(lock, [&] { return done.count(b) != 0; });
            buffer = std::move(done.at(b));
            done.erase(b);
            ++consumed;
            space_cv.notify_all();
        }
        consume(b, std::move(buffer));
    }
    for (auto& t : pool) t.join();
}

}  // namespace peerlens
