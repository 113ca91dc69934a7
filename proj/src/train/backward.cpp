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

#include "pwe/train/backward.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "pwe/common/parallel.hpp"
#include "pwe/nn/spectral_norm.hpp"

namespace pwe::train {

using nn::ConvGeometry;
using nn::LayerKind;
using nn::LayerSpec;
using nn::Shape;

namespace {

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

template <class T>
BasicTensor<T> bias_gradient(const BasicTensor<T>& dy) {
  const std::size_t c = dy.channels();
  std::vector<double> s(c, 0.0);
  for (std::size_t i = 0; i < dy.size(); ++i) s[i % c] += dy[i];
  return BasicTensor<T>({c}, std::vector<T>(s.begin(), s.end()));
}

// Gradients of the crop_output transposed convolution with kernel in (kh, kw, cin, cout) order.
template <class T>
ConvGradients<T> transpose_backward_io(const BasicTensor<T>& x, const BasicTensor<T>& w_io,
                                       const BasicTensor<T>& dy, std::size_t s) {
  const std::size_t n = x.batch(), h = x.height(), wd = x.width(), cin = x.channels();
  const std::size_t kh = w_io.dim(0), kw = w_io.dim(1), cout = w_io.dim(3);
  const std::size_t oh = dy.height(), ow = dy.width();
  const auto cy = static_cast<std::ptrdiff_t>(nn::transpose_crop(kh, s));
  const auto cx = static_cast<std::ptrdiff_t>(nn::transpose_crop(kw, s));
  ConvGradients<T> g{BasicTensor<T>(x.shape()), BasicTensor<T>(w_io.shape()), bias_gradient(dy)};

  parallel_for(0, n * h, [&](std::size_t first, std::size_t last) {
    for (std::size_t row = first; row < last; ++row) {
      const std::size_t bn = row / h, iy = row % h;
      for (std::size_t ix = 0; ix < wd; ++ix) {
        T* dx = &g.input.at(bn, iy, ix, 0);
        for (std::size_t ky = 0; ky < kh; ++ky) {
          const std::ptrdiff_t oy = static_cast<std::ptrdiff_t>(iy * s + ky) - cy;
          if (oy < 0 || oy >= static_cast<std::ptrdiff_t>(oh)) continue;
          for (std::size_t kx = 0; kx < kw; ++kx) {
            const std::ptrdiff_t ox = static_cast<std::ptrdiff_t>(ix * s + kx) - cx;
            if (ox < 0 || ox >= static_cast<std::ptrdiff_t>(ow)) continue;
            const T* d = &dy.at(bn, static_cast<std::size_t>(oy), static_cast<std::size_t>(ox), 0);
            const T* wp = w_io.data() + (ky * kw + kx) * cin * cout;
            for (std::size_t ci = 0; ci < cin; ++ci) {
              const T* wr = wp + ci * cout;
              T acc = 0;
              for (std::size_t co = 0; co < cout; ++co) acc += d[co] * wr[co];
              dx[ci] += acc;
            }
          }
        }
      }
    }
  });

  parallel_for(0, kh * kw, [&](std::size_t first, std::size_t last) {
    for (std::size_t tap = first; tap < last; ++tap) {
      const std::size_t ky = tap / kw, kx = tap % kw;
      T* dw = g.kernel.data() + tap * cin * cout;
      for (std::size_t bn = 0; bn < n; ++bn) {
        for (std::size_t iy = 0; iy < h; ++iy) {
          const std::ptrdiff_t oy = static_cast<std::ptrdiff_t>(iy * s + ky) - cy;
          if (oy < 0 || oy >= static_cast<std::ptrdiff_t>(oh)) continue;
          for (std::size_t ix = 0; ix < wd; ++ix) {
            const std::ptrdiff_t ox = static_cast<std::ptrdiff_t>(ix * s + kx) - cx;
            if (ox < 0 || ox >= static_cast<std::ptrdiff_t>(ow)) continue;
            const T* xp = &x.at(bn, iy, ix, 0);
            const T* d = &dy.at(bn, static_cast<std::size_t>(oy), static_cast<std::size_t>(ox), 0);
            for (std::size_t ci = 0; ci < cin; ++ci) {
              const T xv = xp[ci];
              T* dr = dw + ci * cout;
              for (std::size_t co = 0; co < cout; ++co) dr[co] += xv * d[co];
            }
          }
        }
      }
    }
  });
  return g;
}

template <class T>
const BasicTensor<T>& param(const LayerSpec& l, const WeightStore<T>& w, const char* what) {
  const auto it = w.find(l.name + "/" + what);
  if (it == w.end()) {
    throw std::invalid_argument("backward: missing weight '" + l.name + "/" + what + "'");
  }
  return it->second;
}

template <class T>
void add_into(BasicTensor<T>& into, const BasicTensor<T>& g) {
  if (into.empty()) {
    into = g;
    return;
  }
  for (std::size_t i = 0; i < g.size(); ++i) into[i] += g[i];
}

}  // namespace

bool is_trainable(std::string_view name) {
  return name.ends_with("/kernel") || name.ends_with("/bias") || name.ends_with("/gamma") ||
         name.ends_with("/beta");
}

template <class T>
ConvGradients<T> conv2d_backward(const BasicTensor<T>& x, const BasicTensor<T>& w,
                                 const BasicTensor<T>& dy, std::size_t stride, nn::Padding padding) {
  const std::size_t n = x.batch(), h = x.height(), wd = x.width(), cin = x.channels();
  const std::size_t kh = w.dim(0), kw = w.dim(1), cout = w.dim(3);
  const ConvGeometry geo = nn::conv_geometry(h, wd, kh, kw, stride, padding);
  if (dy.shape() != Shape{n, geo.out_h, geo.out_w, cout}) {
    throw std::invalid_argument("conv2d_backward: output gradient shape " +
                                nn::shape_string(dy.shape()) + " does not match the forward output");
  }
  const auto pt = static_cast<std::ptrdiff_t>(geo.pad_top);
  const auto pl = static_cast<std::ptrdiff_t>(geo.pad_left);
  const auto ss = static_cast<std::ptrdiff_t>(stride);
  ConvGradients<T> g{BasicTensor<T>(x.shape()), BasicTensor<T>(w.shape()), bias_gradient(dy)};

  parallel_for(0, n * h, [&](std::size_t first, std::size_t last) {
    for (std::size_t row = first; row < last; ++row) {
      const std::size_t bn = row / h, iy = row % h;
      for (std::size_t ix = 0; ix < wd; ++ix) {
        T* dx = &g.input.at(bn, iy, ix, 0);
        for (std::size_t ky = 0; ky < kh; ++ky) {
          const std::ptrdiff_t py = static_cast<std::ptrdiff_t>(iy) + pt - static_cast<std::ptrdiff_t>(ky);
          if (py < 0 || py % ss != 0 || py / ss >= static_cast<std::ptrdiff_t>(geo.out_h)) continue;
          for (std::size_t kx = 0; kx < kw; ++kx) {
            const std::ptrdiff_t px = static_cast<std::ptrdiff_t>(ix) + pl - static_cast<std::ptrdiff_t>(kx);
            if (px < 0 || px % ss != 0 || px / ss >= static_cast<std::ptrdiff_t>(geo.out_w)) continue;
            const T* d = &dy.at(bn, static_cast<std::size_t>(py / ss), static_cast<std::size_t>(px / ss), 0);
            const T* wp = w.data() + (ky * kw + kx) * cin * cout;
            for (std::size_t ci = 0; ci < cin; ++ci) {
              const T* wr = wp + ci * cout;
              T acc = 0;
              for (std::size_t co = 0; co < cout; ++co) acc += d[co] * wr[co];
              dx[ci] += acc;
            }
          }
        }
      }
    }
  });

  parallel_for(0, kh * kw, [&](std::size_t first, std::size_t last) {
    for (std::size_t tap = first; tap < last; ++tap) {
      const std::size_t ky = tap / kw, kx = tap % kw;
      T* dw = g.kernel.data() + tap * cin * cout;
      for (std::size_t bn = 0; bn < n; ++bn) {
        for (std::size_t oy = 0; oy < geo.out_h; ++oy) {
          const std::ptrdiff_t iy = static_cast<std::ptrdiff_t>(oy * stride + ky) - pt;
          if (iy < 0 || iy >= static_cast<std::ptrdiff_t>(h)) continue;
          for (std::size_t ox = 0; ox < geo.out_w; ++ox) {
            const std::ptrdiff_t ix = static_cast<std::ptrdiff_t>(ox * stride + kx) - pl;
            if (ix < 0 || ix >= static_cast<std::ptrdiff_t>(wd)) continue;
            const T* xp = &x.at(bn, static_cast<std::size_t>(iy), static_cast<std::size_t>(ix), 0);
            const T* d = &dy.at(bn, oy, ox, 0);
            for (std::size_t ci = 0; ci < cin; ++ci) {
              const T xv = xp[ci];
              T* dr = dw + ci * cout;
              for (std::size_t co = 0; co < cout; ++co) dr[co] += xv * d[co];
            }
          }
        }
      }
    }
  });
  return g;
}

template <class T>
ConvGradients<T> conv2d_transpose_backward(const BasicTensor<T>& x, const BasicTensor<T>& w,
                                           const BasicTensor<T>& dy, std::size_t stride,
                                           nn::TransposeSemantics semantics) {
  // Both semantics reduce to crop_output with kernel K (kh, kw, out, in); pad_input stores the
  // converted kernel, and the conversion is a self-inverse permutation.
  const bool pad = semantics == nn::TransposeSemantics::pad_input;
  const BasicTensor<T> crop_kernel = pad ? nn::convert_transpose_kernel(w) : w;
  if (dy.shape() != Shape{x.batch(), x.height() * stride, x.width() * stride, crop_kernel.dim(2)}) {
    throw std::invalid_argument("conv2d_transpose_backward: output gradient shape " +
                                nn::shape_string(dy.shape()) + " does not match the forward output");
  }
  ConvGradients<T> g = transpose_backward_io(x, swap_io(crop_kernel), dy, stride);
  g.kernel = swap_io(g.kernel);
  if (pad) g.kernel = nn::convert_transpose_kernel(g.kernel);
  return g;
}

template <class T>
BasicTensor<T> spectral_norm_backward(const BasicTensor<T>& w, const BasicTensor<T>& grad_normalized,
                                      std::size_t iterations) {
  const nn::SingularEstimate e = nn::estimate_spectral_norm(w, iterations);
  const std::size_t rows = e.u.size();
  double inner = 0.0;  // <G, W / sigma>
  for (std::size_t i = 0; i < w.size(); ++i) inner += static_cast<double>(grad_normalized[i]) * w[i];
  inner /= e.sigma;
  BasicTensor<T> g(w.shape());
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double uv = e.u[i % rows] * e.v[i / rows];
    g[i] = static_cast<T>((grad_normalized[i] - inner * uv) / e.sigma);
  }
  return g;
}

template <class T>
GraphGradients<T> backward(const nn::GraphSpec& graph, const WeightStore<T>& weights,
                           const BasicTensor<T>& x, const std::vector<BasicTensor<T>>& outputs,
                           const BasicTensor<T>& grad_output) {
  const std::size_t n = graph.layers.size();
  GraphGradients<T> result;
  if (outputs.size() != n) {
    throw std::invalid_argument("backward: expected " + std::to_string(n) +
                                " recorded outputs, got " + std::to_string(outputs.size()));
  }
  const Shape& out_shape = n == 0 ? x.shape() : outputs.back().shape();
  if (grad_output.shape() != out_shape) {
    throw std::invalid_argument("backward: output gradient shape " +
                                nn::shape_string(grad_output.shape()) + " does not match " +
                                nn::shape_string(out_shape));
  }
  if (n == 0) {
    result.input = grad_output;
    return result;
  }

  std::vector<BasicTensor<T>> grads(n);
  BasicTensor<T> grad_input;
  grads[n - 1] = grad_output;
  for (std::size_t i = n; i-- > 0;) {
    const LayerSpec& l = graph.layers[i];
    BasicTensor<T> dy = std::move(grads[i]);
    if (dy.empty()) dy = BasicTensor<T>(outputs[i].shape());  // output unused downstream
    const BasicTensor<T>& in = i == 0 ? x : outputs[i - 1];
    const BasicTensor<T>& y = outputs[i];
    BasicTensor<T> dx;
    const std::string p = l.name + "/";
    switch (l.kind) {
      case LayerKind::conv2d:
      case LayerKind::conv2d_transpose: {
        const BasicTensor<T>& stored = param(l, weights, "kernel");
        const BasicTensor<T> kernel = l.spectral_norm ? nn::effective_kernel(l, weights) : stored;
        ConvGradients<T> g = l.kind == LayerKind::conv2d
                                 ? conv2d_backward(in, kernel, dy, l.stride, l.padding)
                                 : conv2d_transpose_backward(in, kernel, dy, l.stride, l.semantics);
        if (l.spectral_norm) g.kernel = spectral_norm_backward(stored, g.kernel, l.power_iterations);
        add_into(result.weights[p + "kernel"], g.kernel);
        if (l.use_bias) add_into(result.weights[p + "bias"], g.bias);
        dx = std::move(g.input);
        break;
      }
      case LayerKind::leaky_relu: {
        dx = BasicTensor<T>(dy.shape());
        const T a = static_cast<T>(l.alpha);
        for (std::size_t k = 0; k < dy.size(); ++k) dx[k] = in[k] >= T(0) ? dy[k] : a * dy[k];
        break;
      }
      case LayerKind::tanh: {
        dx = BasicTensor<T>(dy.shape());
        for (std::size_t k = 0; k < dy.size(); ++k) dx[k] = dy[k] * (T(1) - y[k] * y[k]);
        break;
      }
      case LayerKind::sigmoid: {
        dx = BasicTensor<T>(dy.shape());
        for (std::size_t k = 0; k < dy.size(); ++k) dx[k] = dy[k] * y[k] * (T(1) - y[k]);
        break;
      }
      case LayerKind::batch_norm: {
        const auto& mean = param(l, weights, "moving_mean");
        const auto& var = param(l, weights, "moving_variance");
        const auto& gamma = param(l, weights, "gamma");
        const std::size_t c = in.channels();
        std::vector<double> inv(c), dg(c, 0.0), db(c, 0.0);
        for (std::size_t k = 0; k < c; ++k) inv[k] = 1.0 / std::sqrt(static_cast<double>(var[k]) + l.eps);
        dx = BasicTensor<T>(dy.shape());
        for (std::size_t k = 0; k < dy.size(); ++k) {
          const std::size_t ch = k % c;
          dx[k] = static_cast<T>(dy[k] * gamma[ch] * inv[ch]);
          dg[ch] += dy[k] * (in[k] - mean[ch]) * inv[ch];
          db[ch] += dy[k];
        }
        add_into(result.weights[p + "gamma"], BasicTensor<T>({c}, std::vector<T>(dg.begin(), dg.end())));
        add_into(result.weights[p + "beta"], BasicTensor<T>({c}, std::vector<T>(db.begin(), db.end())));
        break;
      }
      case LayerKind::instance_norm: {
        const auto& gamma = param(l, weights, "gamma");
        const std::size_t nb = in.batch(), hw = in.height() * in.width(), c = in.channels();
        std::vector<double> dg(c, 0.0), db(c, 0.0);
        dx = BasicTensor<T>(dy.shape());
        for (std::size_t b = 0; b < nb; ++b) {
          const T* xb = in.data() + b * hw * c;
          const T* gb = dy.data() + b * hw * c;
          T* ob = dx.data() + b * hw * c;
          std::vector<double> mean(c, 0.0), var(c, 0.0), sdy(c, 0.0), sdyx(c, 0.0);
          for (std::size_t q = 0; q < hw; ++q)
            for (std::size_t k = 0; k < c; ++k) mean[k] += xb[q * c + k];
          for (std::size_t k = 0; k < c; ++k) mean[k] /= static_cast<double>(hw);
          for (std::size_t q = 0; q < hw; ++q)
            for (std::size_t k = 0; k < c; ++k) var[k] += std::pow(xb[q * c + k] - mean[k], 2);
          std::vector<double> inv(c);
          for (std::size_t k = 0; k < c; ++k) inv[k] = 1.0 / std::sqrt(var[k] / static_cast<double>(hw) + l.eps);
          for (std::size_t q = 0; q < hw; ++q) {
            for (std::size_t k = 0; k < c; ++k) {
              const double xh = (xb[q * c + k] - mean[k]) * inv[k];
              sdy[k] += gb[q * c + k];
              sdyx[k] += gb[q * c + k] * xh;
            }
          }
          for (std::size_t k = 0; k < c; ++k) {
            dg[k] += sdyx[k];
            db[k] += sdy[k];
          }
          const double m = static_cast<double>(hw);
          for (std::size_t q = 0; q < hw; ++q) {
            for (std::size_t k = 0; k < c; ++k) {
              const double xh = (xb[q * c + k] - mean[k]) * inv[k];
              ob[q * c + k] = static_cast<T>(gamma[k] * inv[k] / m *
                                             (m * gb[q * c + k] - sdy[k] - xh * sdyx[k]));
            }
          }
        }
        add_into(result.weights[p + "gamma"], BasicTensor<T>({c}, std::vector<T>(dg.begin(), dg.end())));
        add_into(result.weights[p + "beta"], BasicTensor<T>({c}, std::vector<T>(db.begin(), db.end())));
        break;
      }
      case LayerKind::concat_skip: {
        const std::size_t ca = in.channels(), ct = dy.channels(), cb = ct - ca;
        const std::size_t pixels = dy.size() / ct;
        dx = BasicTensor<T>(in.shape());
        Shape skip_shape = in.shape();
        skip_shape[3] = cb;
        BasicTensor<T> ds(skip_shape);
        for (std::size_t q = 0; q < pixels; ++q) {
          for (std::size_t k = 0; k < ca; ++k) dx[q * ca + k] = dy[q * ct + k];
          for (std::size_t k = 0; k < cb; ++k) ds[q * cb + k] = dy[q * ct + ca + k];
        }
        const std::size_t j = graph.index_of(l.skip);
        add_into(j == n ? grad_input : grads[j], ds);
        break;
      }
      default:
        throw std::invalid_argument("backward: unsupported layer kind for layer '" + l.name + "'");
    }
    add_into(i == 0 ? grad_input : grads[i - 1], dx);
  }
  result.input = std::move(grad_input);
  return result;
}

template <class T>
void accumulate(WeightStore<T>& into, const WeightStore<T>& g) {
  for (const auto& [name, t] : g) add_into(into[name], t);
}

template <class T>
void scale(WeightStore<T>& g, double factor) {
  for (auto& [name, t] : g) {
    for (T& v : t.values()) v = static_cast<T>(v * factor);
  }
}

#define PWE_INSTANTIATE_BACKWARD(T)                                                               \
  template GraphGradients<T> backward(const nn::GraphSpec&, const WeightStore<T>&,               \
                                      const BasicTensor<T>&, const std::vector<BasicTensor<T>>&, \
                                      const BasicTensor<T>&);                                    \
  template void accumulate(WeightStore<T>&, const WeightStore<T>&);                              \
  template void scale(WeightStore<T>&, double);                                                  \
  template ConvGradients<T> conv2d_backward(const BasicTensor<T>&, const BasicTensor<T>&,        \
                                            const BasicTensor<T>&, std::size_t, nn::Padding);    \
  template ConvGradients<T> conv2d_transpose_backward(const BasicTensor<T>&,                     \
                                                      const BasicTensor<T>&,                     \
                                                      const BasicTensor<T>&, std::size_t,        \
                                                      nn::TransposeSemantics);                   \
  template BasicTensor<T> spectral_norm_backward(const BasicTensor<T>&, const BasicTensor<T>&,   \
                                                 std::size_t);

PWE_INSTANTIATE_BACKWARD(float)
PWE_INSTANTIATE_BACKWARD(double)

}  // namespace pwe::train
