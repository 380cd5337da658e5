#include <pybind11/pybind11.h>
PYBIND11_MODULE(_ppsat, m) { m.doc() = "placeholder"; }
