#pragma once

namespace lpolya {

// Execution policy for the sweep kernels. Every parallel kernel keeps a
// serial twin selectable through this switch; the two must produce identical
// serialized output, which the tests and the benchmark tool both check.
enum class Exec { serial, parallel };

// Index-ordered parallel for. fn(i) must be independent across iterations;
// callers write into slot (i - lo) of a pre-sized buffer so that serial and
// parallel runs flatten to the same order.
template <class Fn>
void for_range(Exec exec, long lo, long hi, Fn&& fn) {
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long i = lo; i < hi; ++i) fn(i);
    } else {
        for (long i = lo; i < hi; ++i) fn(i);
    }
}

}  // namespace lpolya
