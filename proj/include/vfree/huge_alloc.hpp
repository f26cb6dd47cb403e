#pragma once

#include <cstddef>
#include <cstdlib>
#include <new>

namespace vfree {

/// Allocator that asks the kernel for transparent huge pages on large
/// blocks. Falls back to ordinary pages when the advice is unavailable.
template <class T>
struct HugePageAllocator {
    using value_type = T;

    HugePageAllocator() = default;
    template <class U>
    HugePageAllocator(const HugePageAllocator<U>&) noexcept {}

    T* allocate(std::size_t n);
    void deallocate(T* p, std::size_t) noexcept { std::free(p); }

    template <class U>
    friend bool operator==(const HugePageAllocator&, const HugePageAllocator<U>&) noexcept {
        return true;
    }
};

/// Large, page-aligned block with huge-page advice.
void* huge_page_alloc(std::size_t bytes);

template <class T>
T* HugePageAllocator<T>::allocate(std::size_t n) {
    if (n > static_cast<std::size_t>(-1) / sizeof(T)) throw std::bad_array_new_length();
    return static_cast<T*>(huge_page_alloc(n * sizeof(T)));
}

}  // namespace vfree
