// A minimal worker pool: run n independent tasks on a fixed number of
// threads.  Exceptions are captured and rethrown on the caller's thread.

#ifndef QLINES_PARALLEL_HPP
#define QLINES_PARALLEL_HPP

#include <atomic>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace qlines {

class TaskRunner {
  public:
    explicit TaskRunner(unsigned threads) : threads_(threads ? threads : 1) {}

    unsigned threads() const { return threads_; }

    // fn(i) for i in [0, n); tasks must be independent
    void run(size_t n, const std::function<void(size_t)>& fn) const {
        if (n == 0) return;
        unsigned nt = (unsigned)std::min<size_t>(threads_, n);
        if (nt <= 1) {
            for (size_t i = 0; i < n; ++i) fn(i);
            return;
        }
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(nt);
        for (unsigned t = 0; t < nt; ++t)
            pool.emplace_back([&, t] {
                try {
                    for (size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        for (auto& th : pool) th.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

  private:
    unsigned threads_;
};

}  // namespace qlines

#endif
