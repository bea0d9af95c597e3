#pragma once

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <new>
#include <type_traits>
#include <utility>

namespace nv::detail {

/// Minimal inline-storage vector for trivially copyable element types.
/// The relation sweeps churn through hundreds of millions of short cell
/// lists; keeping them off the heap is worth the hand-rolled container.
template <typename T, std::size_t N>
class SmallVector {
    static_assert(std::is_trivially_copyable_v<T>);

public:
    SmallVector() = default;

    SmallVector(const SmallVector& o) { assign(o.data(), o.size_); }

    SmallVector(SmallVector&& o) noexcept {
        if (o.heap_) {
            heap_ = o.heap_;
            cap_ = o.cap_;
            size_ = o.size_;
            o.heap_ = nullptr;
            o.cap_ = N;
            o.size_ = 0;
        } else {
            assign(o.data(), o.size_);
            o.size_ = 0;
        }
    }

    SmallVector& operator=(const SmallVector& o) {
        if (this != &o)
            assign(o.data(), o.size_);
        return *this;
    }

    SmallVector& operator=(SmallVector&& o) noexcept {
        if (this == &o)
            return *this;
        release();
        if (o.heap_) {
            heap_ = o.heap_;
            cap_ = o.cap_;
            size_ = o.size_;
            o.heap_ = nullptr;
            o.cap_ = N;
            o.size_ = 0;
        } else {
            assign(o.data(), o.size_);
            o.size_ = 0;
        }
        return *this;
    }

    ~SmallVector() { release(); }

    T* data() { return heap_ ? heap_ : inline_storage(); }
    const T* data() const { return heap_ ? heap_ : inline_storage(); }

    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    T& operator[](std::size_t i) { return data()[i]; }
    const T& operator[](std::size_t i) const { return data()[i]; }

    T* begin() { return data(); }
    T* end() { return data() + size_; }
    const T* begin() const { return data(); }
    const T* end() const { return data() + size_; }

    T& back() { return data()[size_ - 1]; }
    const T& back() const { return data()[size_ - 1]; }

    void clear() { size_ = 0; }

    void reserve(std::size_t want) {
        if (want > cap_)
            grow(want);
    }

    void push_back(const T& v) {
        if (size_ == cap_) {
            T detached = v; // v may alias the buffer grow() frees
            grow(cap_ * 2);
            data()[size_++] = detached;
            return;
        }
        data()[size_++] = v;
    }

    void pop_back() { --size_; }

    void erase_at(std::size_t i) {
        T* p = data();
        std::memmove(p + i, p + i + 1, (size_ - i - 1) * sizeof(T));
        --size_;
    }

private:
    T* inline_storage() { return reinterpret_cast<T*>(buf_); }
    const T* inline_storage() const { return reinterpret_cast<const T*>(buf_); }

    void assign(const T* src, std::size_t count) {
        if (count > cap_)
            grow(count);
        std::memcpy(data(), src, count * sizeof(T));
        size_ = count;
    }

    void grow(std::size_t want) {
        std::size_t cap = std::max(want, cap_ * 2);
        T* fresh = static_cast<T*>(::operator new(cap * sizeof(T)));
        std::memcpy(fresh, data(), size_ * sizeof(T));
        release();
        heap_ = fresh;
        cap_ = cap;
    }

    void release() {
        if (heap_) {
            ::operator delete(heap_);
            heap_ = nullptr;
            cap_ = N;
        }
    }

    alignas(T) unsigned char buf_[N * sizeof(T)];
    T* heap_ = nullptr;
    std::size_t size_ = 0;
    std::size_t cap_ = N;
};

} // namespace nv::detail
