/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 The pwenhance Authors. All rights reserved.
 * SPDX-License-Identifier: Apache-2.0
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "pwe/nn/ops.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "pwe/common/parallel.hpp"

namespace pwe::nn {
namespace {

void check_kernel(const char* op, const Shape& x, const Shape& w, std::size_t in_axis,
                  std::size_t stride) {
  if (w.size() != 4) {
    throw std::invalid_argument(std::string(op) + ": kernel must be rank 4, got shape " +
                                shape_string(w));
  }
  if (w[0] == 0 || w[1] == 0 || w[2] == 0 || w[3] == 0) {
    throw std::invalid_argument(std::string(op) + ": empty kernel " + shape_string(w));
  }
  if (x[3] != w[in_axis]) {
    throw std::invalid_argument(std::string(op) + ": input has " + std::to_string(x[3]) +
                                " channels but kernel " + shape_string(w) + " expects " +
                                std::to_string(w[in_axis]));
  }
  if (stride == 0) throw std::invalid_argument(std::string(op) + ": stride must be positive");
}

template <class T>
const T* bias_or_null(const char* op, const BasicTensor<T>& b, std::size_t cout) {
  if (b.empty()) return nullptr;
  if (b.rank() != 1 || b.dim(0) != cout) {
    throw std::invalid_argument(std::string(op) + ": bias shape " + shape_string(b.shape()) +
                                " does not match " + std::to_string(cout) + " output channels");
  }
  return b.data();
}

template <class T>
void check_channel_param(const char* op, const char* name, const BasicTensor<T>& p,
                         std::size_t channels) {
  if (p.rank() != 1 || p.dim(0) != channels) {
    throw std::invalid_argument(std::string(op) + ": " + name + " shape " +
                                shape_string(p.shape()) + " does not match " +
                                std::to_string(channels) + " channels");
  }
}

template <class T, class F>
BasicTensor<T> map(const BasicTensor<T>& x, F f) {
  BasicTensor<T> y(x.shape());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = f(x[i]);
  return y;
}

// Kernel (kh, kw, a, b) -> (kh, kw, b, a) without flipping.
template <class T>
BasicTensor<T> swap_io(const BasicTensor<T>& w) {
  const std::size_t kh = w.dim(0), kw = w.dim(1), a = w.dim(2), b = w.dim(3);
  BasicTensor<T> out({kh, kw, b, a});
  for (std::size_t t = 0; t < kh * kw; ++t) {
    for (std::size_t i = 0; i < a; ++i) {
      for (std::size_t j = 0; j < b; ++j) out[(t * b + j) * a + i] = w[(t * a + i) * b + j];
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(Padding p) { return p == Padding::same ? "same" : "valid"; }

std::string_view to_string(TransposeSemantics s) {
  return s == TransposeSemantics::crop_output ? "crop_output" : "pad_input";
}

ConvGeometry conv_geometry(std::size_t in_h, std::size_t in_w, std::size_t kh, std::size_t kw,
                           std::size_t stride, Padding padding) {
  ConvGeometry g;
  if (padding == Padding::valid) {
    if (in_h < kh || in_w < kw) {
      throw std::invalid_argument("conv2d: valid padding needs input " + std::to_string(in_h) +
                                  "x" + std::to_string(in_w) + " at least as large as kernel " +
                                  std::to_string(kh) + "x" + std::to_string(kw));
    }
    g.out_h = (in_h - kh) / stride + 1;
    g.out_w = (in_w - kw) / stride + 1;
    return g;
  }
  g.out_h = (in_h + stride - 1) / stride;
  g.out_w = (in_w + stride - 1) / stride;
  const std::size_t need_h = (g.out_h - 1) * stride + kh;
  const std::size_t need_w = (g.out_w - 1) * stride + kw;
  g.pad_top = need_h > in_h ? (need_h - in_h) / 2 : 0;
  g.pad_left = need_w > in_w ? (need_w - in_w) / 2 : 0;
  return g;
}

std::size_t transpose_crop(std::size_t kernel, std::size_t stride) {
  return kernel > stride ? (kernel - stride) / 2 : 0;
}

template <class T>
BasicTensor<T> conv2d(const BasicTensor<T>& x, const BasicTensor<T>& w, const BasicTensor<T>& b,
                      std::size_t stride, Padding padding) {
  x.require_nhwc("conv2d");
  check_kernel("conv2d", x.shape(), w.shape(), 2, stride);
  const std::size_t n = x.batch(), h = x.height(), wd = x.width(), cin = x.channels();
  const std::size_t kh = w.dim(0), kw = w.dim(1), cout = w.dim(3);
  const T* bias = bias_or_null("conv2d", b, cout);
  const ConvGeometry g = conv_geometry(h, wd, kh, kw, stride, padding);
  BasicTensor<T> y({n, g.out_h, g.out_w, cout});

  parallel_for(0, n * g.out_h, [&](std::size_t first, std::size_t last) {
    std::vector<T> acc(cout);
    for (std::size_t row = first; row < last; ++row) {
      const std::size_t bn = row / g.out_h, oy = row % g.out_h;
      for (std::size_t ox = 0; ox < g.out_w; ++ox) {
        for (std::size_t co = 0; co < cout; ++co) acc[co] = bias ? bias[co] : T(0);
        for (std::size_t ky = 0; ky < kh; ++ky) {
          const std::ptrdiff_t iy = static_cast<std::ptrdiff_t>(oy * stride + ky) -
                                    static_cast<std::ptrdiff_t>(g.pad_top);
          if (iy < 0 || iy >= static_cast<std::ptrdiff_t>(h)) continue;
          for (std::size_t kx = 0; kx < kw; ++kx) {
            const std::ptrdiff_t ix = static_cast<std::ptrdiff_t>(ox * stride + kx) -
                                      static_cast<std::ptrdiff_t>(g.pad_left);
            if (ix < 0 || ix >= static_cast<std::ptrdiff_t>(wd)) continue;
            const T* xp = &x.at(bn, static_cast<std::size_t>(iy), static_cast<std::size_t>(ix), 0);
            const T* wp = w.data() + (ky * kw + kx) * cin * cout;
            for (std::size_t ci = 0; ci < cin; ++ci) {
              const T xv = xp[ci];
              const T* wr = wp + ci * cout;
              for (std::size_t co = 0; co < cout; ++co) acc[co] += xv * wr[co];
            }
          }
        }
        std::copy(acc.begin(), acc.end(), &y.at(bn, oy, ox, 0));
      }
    }
  });
  return y;
}

namespace {

// out[o] = b + sum over (i, k) with i*s + k == o + crop of x[i] w[k]; w is (kh, kw, cin, cout).
template <class T>
BasicTensor<T> transpose_crop_output(const BasicTensor<T>& x, const BasicTensor<T>& w_io,
                                     const T* bias, std::size_t s) {
  const std::size_t n = x.batch(), h = x.height(), wd = x.width(), cin = x.channels();
  const std::size_t kh = w_io.dim(0), kw = w_io.dim(1), cout = w_io.dim(3);
  const std::size_t oh = h * s, ow = wd * s;
  const std::size_t cy = transpose_crop(kh, s), cx = transpose_crop(kw, s);
  BasicTensor<T> y({n, oh, ow, cout});
  parallel_for(0, n * oh, [&](std::size_t first, std::size_t last) {
    std::vector<T> acc(cout);
    for (std::size_t row = first; row < last; ++row) {
      const std::size_t bn = row / oh, oy = row % oh;
      for (std::size_t ox = 0; ox < ow; ++ox) {
        for (std::size_t co = 0; co < cout; ++co) acc[co] = bias ? bias[co] : T(0);
        for (std::size_t ky = 0; ky < kh; ++ky) {
          const std::ptrdiff_t py = static_cast<std::ptrdiff_t>(oy + cy) - static_cast<std::ptrdiff_t>(ky);
          if (py < 0 || py % static_cast<std::ptrdiff_t>(s) != 0) continue;
          const std::size_t iy = static_cast<std::size_t>(py) / s;
          if (iy >= h) continue;
          for (std::size_t kx = 0; kx < kw; ++kx) {
            const std::ptrdiff_t px = static_cast<std::ptrdiff_t>(ox + cx) - static_cast<std::ptrdiff_t>(kx);
            if (px < 0 || px % static_cast<std::ptrdiff_t>(s) != 0) continue;
            const std::size_t ix = static_cast<std::size_t>(px) / s;
            if (ix >= wd) continue;
            const T* xp = &x.at(bn, iy, ix, 0);
            const T* wp = w_io.data() + (ky * kw + kx) * cin * cout;
            for (std::size_t ci = 0; ci < cin; ++ci) {
              const T xv = xp[ci];
              const T* wr = wp + ci * cout;
              for (std::size_t co = 0; co < cout; ++co) acc[co] += xv * wr[co];
            }
          }
        }
        std::copy(acc.begin(), acc.end(), &y.at(bn, oy, ox, 0));
      }
    }
  });
  return y;
}

// Stride-1 correlation of the dilated, front-padded input with a (kh, kw, cin, cout) kernel.
template <class T>
BasicTensor<T> transpose_pad_input(const BasicTensor<T>& x, const BasicTensor<T>& w,
                                   const T* bias, std::size_t s) {
  const std::size_t n = x.batch(), h = x.height(), wd = x.width(), cin = x.channels();
  const std::size_t kh = w.dim(0), kw = w.dim(1), cout = w.dim(3);
  const std::size_t oh = h * s, ow = wd * s;
  const auto py = static_cast<std::ptrdiff_t>(kh - 1 - transpose_crop(kh, s));
  const auto px = static_cast<std::ptrdiff_t>(kw - 1 - transpose_crop(kw, s));
  const auto ss = static_cast<std::ptrdiff_t>(s);
  BasicTensor<T> y({n, oh, ow, cout});
  parallel_for(0, n * oh, [&](std::size_t first, std::size_t last) {
    std::vector<T> acc(cout);
    for (std::size_t row = first; row < last; ++row) {
      const std::size_t bn = row / oh, oy = row % oh;
      for (std::size_t ox = 0; ox < ow; ++ox) {
        for (std::size_t co = 0; co < cout; ++co) acc[co] = bias ? bias[co] : T(0);
        for (std::size_t ty = 0; ty < kh; ++ty) {
          // Position in the dilated input; only multiples of s carry samples.
          const std::ptrdiff_t dy = static_cast<std::ptrdiff_t>(oy + ty) - py;
          if (dy < 0 || dy % ss != 0 || dy / ss >= static_cast<std::ptrdiff_t>(h)) continue;
          for (std::size_t tx = 0; tx < kw; ++tx) {
            const std::ptrdiff_t dx = static_cast<std::ptrdiff_t>(ox + tx) - px;
            if (dx < 0 || dx % ss != 0 || dx / ss >= static_cast<std::ptrdiff_t>(wd)) continue;
            const T* xp = &x.at(bn, static_cast<std::size_t>(dy / ss), static_cast<std::size_t>(dx / ss), 0);
            const T* wp = w.data() + (ty * kw + tx) * cin * cout;
            for (std::size_t ci = 0; ci < cin; ++ci) {
              const T xv = xp[ci];
              const T* wr = wp + ci * cout;
              for (std::size_t co = 0; co < cout; ++co) acc[co] += xv * wr[co];
            }
          }
        }
        std::copy(acc.begin(), acc.end(), &y.at(bn, oy, ox, 0));
      }
    }
  });
  return y;
}

}  // namespace

template <class T>
BasicTensor<T> conv2d_transpose(const BasicTensor<T>& x, const BasicTensor<T>& w,
                                const BasicTensor<T>& b, std::size_t stride,
                                TransposeSemantics semantics) {
  x.require_nhwc("conv2d_transpose");
  if (semantics == TransposeSemantics::crop_output) {
    check_kernel("conv2d_transpose", x.shape(), w.shape(), 3, stride);
    const T* bias = bias_or_null("conv2d_transpose", b, w.dim(2));
    return transpose_crop_output(x, swap_io(w), bias, stride);
  }
  if (semantics == TransposeSemantics::pad_input) {
    check_kernel("conv2d_transpose", x.shape(), w.shape(), 2, stride);
    const T* bias = bias_or_null("conv2d_transpose", b, w.dim(3));
    return transpose_pad_input(x, w, bias, stride);
  }
  throw std::invalid_argument("conv2d_transpose: unknown semantics");
}

template <class T>
BasicTensor<T> convert_transpose_kernel(const BasicTensor<T>& w) {
  if (w.rank() != 4) {
    throw std::invalid_argument("convert_transpose_kernel: kernel must be rank 4, got " +
                                shape_string(w.shape()));
  }
  const std::size_t kh = w.dim(0), kw = w.dim(1), a = w.dim(2), b = w.dim(3);
  BasicTensor<T> out({kh, kw, b, a});
  for (std::size_t ky = 0; ky < kh; ++ky) {
    for (std::size_t kx = 0; kx < kw; ++kx) {
      const std::size_t src = ((kh - 1 - ky) * kw + (kw - 1 - kx)) * a * b;
      const std::size_t dst = (ky * kw + kx) * a * b;
      for (std::size_t i = 0; i < a; ++i) {
        for (std::size_t j = 0; j < b; ++j) out[dst + j * a + i] = w[src + i * b + j];
      }
    }
  }
  return out;
}

template <class T>
BasicTensor<T> leaky_relu(const BasicTensor<T>& x, double alpha) {
  const T a = static_cast<T>(alpha);
  return map(x, [a](T v) { return v >= T(0) ? v : a * v; });
}

template <class T>
BasicTensor<T> tanh(const BasicTensor<T>& x) {
  return map(x, [](T v) { return std::tanh(v); });
}

template <class T>
BasicTensor<T> sigmoid(const BasicTensor<T>& x) {
  return map(x, [](T v) { return T(1) / (T(1) + std::exp(-v)); });
}

template <class T>
BasicTensor<T> batch_norm_inference(const BasicTensor<T>& x, const BasicTensor<T>& mean,
                                    const BasicTensor<T>& var, const BasicTensor<T>& gamma,
                                    const BasicTensor<T>& beta, double eps) {
  x.require_nhwc("batch_norm");
  if (!(eps > 0.0)) throw std::invalid_argument("batch_norm: eps must be positive");
  const std::size_t c = x.channels();
  check_channel_param("batch_norm", "mean", mean, c);
  check_channel_param("batch_norm", "variance", var, c);
  check_channel_param("batch_norm", "gamma", gamma, c);
  check_channel_param("batch_norm", "beta", beta, c);
  std::vector<T> scale(c), shift(c);
  for (std::size_t k = 0; k < c; ++k) {
    scale[k] = static_cast<T>(gamma[k] / std::sqrt(static_cast<double>(var[k]) + eps));
    shift[k] = beta[k] - mean[k] * scale[k];
  }
  BasicTensor<T> y(x.shape());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] * scale[i % c] + shift[i % c];
  return y;
}

template <class T>
BasicTensor<T> instance_norm(const BasicTensor<T>& x, const BasicTensor<T>& gamma,
                             const BasicTensor<T>& beta, double eps) {
  x.require_nhwc("instance_norm");
  if (!(eps > 0.0)) throw std::invalid_argument("instance_norm: eps must be positive");
  const std::size_t n = x.batch(), hw = x.height() * x.width(), c = x.channels();
  check_channel_param("instance_norm", "gamma", gamma, c);
  check_channel_param("instance_norm", "beta", beta, c);
  BasicTensor<T> y(x.shape());
  for (std::size_t b = 0; b < n; ++b) {
    const T* xb = x.data() + b * hw * c;
    T* yb = y.data() + b * hw * c;
    std::vector<double> mean(c, 0.0), var(c, 0.0);
    for (std::size_t p = 0; p < hw; ++p) {
      for (std::size_t k = 0; k < c; ++k) mean[k] += xb[p * c + k];
    }
    for (std::size_t k = 0; k < c; ++k) mean[k] /= static_cast<double>(hw);
    for (std::size_t p = 0; p < hw; ++p) {
      for (std::size_t k = 0; k < c; ++k) {
        const double d = xb[p * c + k] - mean[k];
        var[k] += d * d;
      }
    }
    std::vector<double> inv(c);
    for (std::size_t k = 0; k < c; ++k) inv[k] = 1.0 / std::sqrt(var[k] / static_cast<double>(hw) + eps);
    for (std::size_t p = 0; p < hw; ++p) {
      for (std::size_t k = 0; k < c; ++k) {
        yb[p * c + k] = static_cast<T>(gamma[k] * (xb[p * c + k] - mean[k]) * inv[k] + beta[k]);
      }
    }
  }
  return y;
}

template <class T>
BasicTensor<T> concat_channels(const BasicTensor<T>& a, const BasicTensor<T>& b) {
  a.require_nhwc("concat");
  b.require_nhwc("concat");
  if (a.batch() != b.batch() || a.height() != b.height() || a.width() != b.width()) {
    throw std::invalid_argument("concat: shapes " + shape_string(a.shape()) + " and " +
                                shape_string(b.shape()) + " differ outside the channel axis");
  }
  const std::size_t ca = a.channels(), cb = b.channels(), pixels = a.size() / ca;
  BasicTensor<T> y({a.batch(), a.height(), a.width(), ca + cb});
  for (std::size_t p = 0; p < pixels; ++p) {
    std::copy_n(a.data() + p * ca, ca, y.data() + p * (ca + cb));
    std::copy_n(b.data() + p * cb, cb, y.data() + p * (ca + cb) + ca);
  }
  return y;
}

#define PWE_INSTANTIATE_OPS(T)                                                                   \
  template BasicTensor<T> conv2d(const BasicTensor<T>&, const BasicTensor<T>&,                  \
                                 const BasicTensor<T>&, std::size_t, Padding);                  \
  template BasicTensor<T> conv2d_transpose(const BasicTensor<T>&, const BasicTensor<T>&,        \
                                           const BasicTensor<T>&, std::size_t,                  \
                                           TransposeSemantics);                                 \
  template BasicTensor<T> convert_transpose_kernel(const BasicTensor<T>&);                      \
  template BasicTensor<T> leaky_relu(const BasicTensor<T>&, double);                            \
  template BasicTensor<T> tanh(const BasicTensor<T>&);                                          \
  template BasicTensor<T> sigmoid(const BasicTensor<T>&);                                       \
  template BasicTensor<T> batch_norm_inference(const BasicTensor<T>&, const BasicTensor<T>&,    \
                                               const BasicTensor<T>&, const BasicTensor<T>&,    \
                                               const BasicTensor<T>&, double);                  \
  template BasicTensor<T> instance_norm(const BasicTensor<T>&, const BasicTensor<T>&,           \
                                        const BasicTensor<T>&, double);                         \
  template BasicTensor<T> concat_channels(const BasicTensor<T>&, const BasicTensor<T>&);

PWE_INSTANTIATE_OPS(float)
PWE_INSTANTIATE_OPS(double)

}  // namespace pwe::nn
