#pragma once

// Implementation of for_each_attachment; included from polycycle.hpp.

#include <functional>

namespace polycycle {
namespace detail {

class AttachmentWalker {
public:
    AttachmentWalker(const Polycycle& p, int hole, int gon_size,
                     const std::function<bool(const Attachment&)>& callback)
        : p_(p), cycle_(p.map().face_darts(hole)), gon_size_(gon_size), q_(p.params().q),
          callback_(callback) {
        length_ = static_cast<int>(cycle_.size());
        degree_.resize(length_);
        for (int i = 0; i < length_; ++i) degree_[i] = p.map().degree(p.map().tail(cycle_[i]));
    }

    // Enumerate with run 1 starting at hole position `start` and having `first_length` edges.
    bool from(int start, int first_length) {
        start_ = start;
        current_.gon_size = gon_size_;
        current_.runs.clear();
        current_.free_after.clear();
        return place_run(0, first_length, 0);
    }

    int length() const { return length_; }

private:
    int deg(int offset) const { return degree_[(start_ + offset) % length_]; }
    Dart dart(int offset) const { return cycle_[(start_ + offset) % length_]; }

    // Run starting at `offset` with `k` edges; `used` = face sides already assigned.
    bool place_run(int offset, int k, int used) {
        if (offset + k > length_ || used + k > gon_size_) return true;
        for (int i = 1; i < k; ++i)
            if (deg(offset + i) != q_) return true;

        current_.runs.push_back({dart(offset), k});
        const int end = offset + k;
        const int base = used + k;
        bool keep_going = true;

        if (current_.runs.size() == 1 && k == length_) {
            // closes the whole hole
            if (base == gon_size_) {
                bool ok = deg(0) == q_;
                if (ok) {
                    current_.free_after.push_back(0);
                    keep_going = callback_(current_);
                    current_.free_after.pop_back();
                }
            }
            current_.runs.pop_back();
            return keep_going;
        }

        for (int free = 0; keep_going && base + free <= gon_size_; ++free) {
            current_.free_after.push_back(free);
            if (base + free == gon_size_) {
                // junction back to the start of run 1
                const int gap = length_ - end;
                if (gap >= 1 && junction_ok(end, length_, free, gap)) keep_going = callback_(current_);
            } else {
                for (int next = end + 1; keep_going && next < length_; ++next) {
                    const int gap = next - end;
                    if (!junction_ok(end, next, free, gap)) continue;
                    for (int k2 = 1; keep_going && next + k2 <= length_ - 1; ++k2) {
                        if (base + free + k2 > gon_size_) break;
                        keep_going = place_run(next, k2, base + free);
                    }
                }
            }
            current_.free_after.pop_back();
        }
        current_.runs.pop_back();
        return keep_going;
    }

    bool junction_ok(int end, int next_start, int free, int gap) const {
        const int a = deg(end % length_);
        const int b = deg(next_start % length_);
        if (free == 0) return gap >= 2 && a + b <= q_;
        return a + 1 <= q_ && b + 1 <= q_;
    }

    const Polycycle& p_;
    const std::vector<Dart>& cycle_;
    int gon_size_;
    int q_;
    const std::function<bool(const Attachment&)>& callback_;
    int length_ = 0;
    int start_ = 0;
    std::vector<int> degree_;
    Attachment current_;
};

}  // namespace detail

template <typename F>
void for_each_attachment(const Polycycle& p, int hole, int gon_size, Dart anchor, F&& callback) {
    const std::function<bool(const Attachment&)> cb = std::forward<F>(callback);
    detail::AttachmentWalker walker(p, hole, gon_size, cb);
    const int length = walker.length();
    const auto& cycle = p.map().face_darts(hole);
    if (anchor >= 0) {
        int pos = -1;
        for (int i = 0; i < length; ++i)
            if (cycle[i] == anchor) pos = i;
        if (pos < 0) return;
        for (int k = 1; k <= std::min(gon_size, length); ++k)
            for (int i = 0; i < k; ++i)
                if (!walker.from(((pos - i) % length + length) % length, k)) return;
        return;
    }
    for (int start = 0; start < length; ++start)
        for (int k = 1; k <= std::min(gon_size, length); ++k)
            if (!walker.from(start, k)) return;
}

}  // namespace polycycle
