#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mmcycle/rational.hpp"

namespace mmc {

/// Undirected weighted edge; parallel edges are fine, loops are ignored by
/// the matching layer (a loop can never belong to a matching).
struct WeightedEdge {
    int u = 0;
    int v = 0;
    std::int64_t w = 0;
};

namespace detail {

/// Maximum weight matching in a general graph, primal-dual with blossoms
/// (Galil's O(V^3) scheme, following van Rantwijk's well-known listing).
/// All computations are exact 64-bit integers; weights are doubled
/// internally so duals stay integral. With `max_cardinality` set, the
/// result has maximum cardinality and maximum weight among such matchings.
class BlossomMatcher {
public:
    BlossomMatcher(int n, const std::vector<WeightedEdge>& edges, bool max_cardinality)
        : nvertex_(n), maxcard_(max_cardinality) {
        edges_.reserve(edges.size());
        for (const WeightedEdge& e : edges) {
            assert(e.u != e.v);
            assert(e.u >= 0 && e.u < n && e.v >= 0 && e.v < n);
            edges_.push_back(e);
        }
        nedge_ = static_cast<int>(edges_.size());

        maxweight_ = 0;
        for (const WeightedEdge& e : edges_)
            maxweight_ = std::max(maxweight_, e.w);

        endpoint_.resize(2 * nedge_);
        for (int k = 0; k < nedge_; ++k) {
            endpoint_[2 * k] = edges_[k].u;
            endpoint_[2 * k + 1] = edges_[k].v;
        }
        neighbend_.assign(nvertex_, {});
        for (int k = 0; k < nedge_; ++k) {
            neighbend_[edges_[k].u].push_back(2 * k + 1);
            neighbend_[edges_[k].v].push_back(2 * k);
        }

        mate_.assign(nvertex_, -1);
        label_.assign(2 * nvertex_, 0);
        labelend_.assign(2 * nvertex_, -1);
        inblossom_.resize(nvertex_);
        for (int v = 0; v < nvertex_; ++v) inblossom_[v] = v;
        blossomparent_.assign(2 * nvertex_, -1);
        blossomchilds_.assign(2 * nvertex_, {});
        blossombase_.assign(2 * nvertex_, -1);
        for (int v = 0; v < nvertex_; ++v) blossombase_[v] = v;
        blossomendps_.assign(2 * nvertex_, {});
        bestedge_.assign(2 * nvertex_, -1);
        blossombestedges_.assign(2 * nvertex_, {});
        has_bestedges_.assign(2 * nvertex_, 0);
        for (int b = 2 * nvertex_ - 1; b >= nvertex_; --b) unusedblossoms_.push_back(b);
        dualvar_.assign(2 * nvertex_, 0);
        for (int v = 0; v < nvertex_; ++v) dualvar_[v] = maxweight_;
        allowedge_.assign(nedge_, 0);
    }

    /// Runs the optimization; returns mate[v] = matched partner or -1.
    std::vector<int> solve() {
        if (nvertex_ == 0) return {};
        for (int t = 0; t < nvertex_; ++t) {
            std::fill(label_.begin(), label_.end(), 0);
            std::fill(bestedge_.begin(), bestedge_.end(), -1);
            for (int b = nvertex_; b < 2 * nvertex_; ++b) {
                blossombestedges_[b].clear();
                has_bestedges_[b] = 0;
            }
            std::fill(allowedge_.begin(), allowedge_.end(), 0);
            queue_.clear();

            for (int v = 0; v < nvertex_; ++v)
                if (mate_[v] == -1 && label_[inblossom_[v]] == 0)
                    assign_label(v, 1, -1);

            bool augmented = false;
            while (true) {
                while (!queue_.empty() && !augmented) {
                    int v = queue_.back();
                    queue_.pop_back();
                    assert(label_[inblossom_[v]] == 1);
                    for (int p : neighbend_[v]) {
                        int k = p / 2;
                        int w = endpoint_[p];
                        if (inblossom_[v] == inblossom_[w]) continue;
                        std::int64_t kslack = 0;
                        bool kslack_valid = false;
                        if (!allowedge_[k]) {
                            kslack = slack(k);
                            kslack_valid = true;
                            if (kslack <= 0) allowedge_[k] = 1;
                        }
                        if (allowedge_[k]) {
                            if (label_[inblossom_[w]] == 0) {
                                assign_label(w, 2, p ^ 1);
                            } else if (label_[inblossom_[w]] == 1) {
                                int base = scan_blossom(v, w);
                                if (base >= 0) {
                                    add_blossom(base, k);
                                } else {
                                    augment_matching(k);
                                    augmented = true;
                                    break;
                                }
                            } else if (label_[w] == 0) {
                                assert(label_[inblossom_[w]] == 2);
                                label_[w] = 2;
                                labelend_[w] = p ^ 1;
                            }
                        } else if (label_[inblossom_[w]] == 1) {
                            int b = inblossom_[v];
                            assert(kslack_valid);
                            if (bestedge_[b] == -1 || kslack < slack(bestedge_[b]))
                                bestedge_[b] = k;
                        } else if (label_[w] == 0) {
                            assert(kslack_valid);
                            if (bestedge_[w] == -1 || kslack < slack(bestedge_[w]))
                                bestedge_[w] = k;
                        }
                    }
                }
                if (augmented) break;

                int deltatype = -1;
                std::int64_t delta = 0;
                int deltaedge = -1;
                int deltablossom = -1;

                if (!maxcard_) {
                    deltatype = 1;
                    std::int64_t mn = dualvar_[0];
                    for (int v = 1; v < nvertex_; ++v) mn = std::min(mn, dualvar_[v]);
                    delta = std::max<std::int64_t>(0, mn);
                }
                for (int v = 0; v < nvertex_; ++v) {
                    if (label_[inblossom_[v]] == 0 && bestedge_[v] != -1) {
                        std::int64_t d = slack(bestedge_[v]);
                        if (deltatype == -1 || d < delta) {
                            delta = d;
                            deltatype = 2;
                            deltaedge = bestedge_[v];
                        }
                    }
                }
                for (int b = 0; b < 2 * nvertex_; ++b) {
                    if (blossomparent_[b] == -1 && label_[b] == 1 && bestedge_[b] != -1) {
                        std::int64_t kslack = slack(bestedge_[b]);
                        assert(kslack % 2 == 0);
                        std::int64_t d = kslack / 2;
                        if (deltatype == -1 || d < delta) {
                            delta = d;
                            deltatype = 3;
                            deltaedge = bestedge_[b];
                        }
                    }
                }
                for (int b = nvertex_; b < 2 * nvertex_; ++b) {
                    if (blossombase_[b] >= 0 && blossomparent_[b] == -1 && label_[b] == 2 &&
                        (deltatype == -1 || dualvar_[b] < delta)) {
                        delta = dualvar_[b];
                        deltatype = 4;
                        deltablossom = b;
                    }
                }
                if (deltatype == -1) {
                    // no further progress possible, end the stage
                    assert(maxcard_);
                    deltatype = 1;
                    std::int64_t mn = dualvar_[0];
                    for (int v = 1; v < nvertex_; ++v) mn = std::min(mn, dualvar_[v]);
                    delta = std::max<std::int64_t>(0, mn);
                }

                for (int v = 0; v < nvertex_; ++v) {
                    int l = label_[inblossom_[v]];
                    if (l == 1)
                        dualvar_[v] -= delta;
                    else if (l == 2)
                        dualvar_[v] += delta;
                }
                for (int b = nvertex_; b < 2 * nvertex_; ++b) {
                    if (blossombase_[b] >= 0 && blossomparent_[b] == -1) {
                        if (label_[b] == 1)
                            dualvar_[b] += delta;
                        else if (label_[b] == 2)
                            dualvar_[b] -= delta;
                    }
                }

                if (deltatype == 1) break;
                if (deltatype == 2) {
                    allowedge_[deltaedge] = 1;
                    int i = edges_[deltaedge].u;
                    if (label_[inblossom_[i]] == 0) i = edges_[deltaedge].v;
                    assert(label_[inblossom_[i]] == 1);
                    queue_.push_back(i);
                } else if (deltatype == 3) {
                    allowedge_[deltaedge] = 1;
                    int i = edges_[deltaedge].u;
                    assert(label_[inblossom_[i]] == 1);
                    queue_.push_back(i);
                } else {
                    expand_blossom(deltablossom, false);
                }
            }

            if (!augmented) break;

            for (int b = nvertex_; b < 2 * nvertex_; ++b)
                if (blossomparent_[b] == -1 && blossombase_[b] >= 0 && label_[b] == 1 &&
                    dualvar_[b] == 0)
                    expand_blossom(b, true);
        }

        verify_optimum();

        std::vector<int> result(nvertex_, -1);
        for (int v = 0; v < nvertex_; ++v)
            if (mate_[v] >= 0) result[v] = endpoint_[mate_[v]];
        for (int v = 0; v < nvertex_; ++v)
            assert(result[v] == -1 || result[result[v]] == v);
        return result;
    }

    /// Edge ids of the matching found by solve() (call after solve()).
    std::vector<int> matched_edges() const {
        std::vector<int> out;
        for (int k = 0; k < nedge_; ++k) {
            int i = edges_[k].u, j = edges_[k].v;
            if (mate_[i] >= 0 && mate_[i] / 2 == k && mate_[j] >= 0 && mate_[j] / 2 == k)
                out.push_back(k);
        }
        return out;
    }

private:
    std::int64_t slack(int k) const {
        return dualvar_[edges_[k].u] + dualvar_[edges_[k].v] - 2 * edges_[k].w;
    }

    void blossom_leaves(int b, std::vector<int>& out) const {
        if (b < nvertex_) {
            out.push_back(b);
            return;
        }
        for (int t : blossomchilds_[b]) blossom_leaves(t, out);
    }

    void assign_label(int w, int t, int p) {
        int b = inblossom_[w];
        assert(label_[w] == 0 && label_[b] == 0);
        label_[w] = label_[b] = t;
        labelend_[w] = labelend_[b] = p;
        bestedge_[w] = bestedge_[b] = -1;
        if (t == 1) {
            std::vector<int> leaves;
            blossom_leaves(b, leaves);
            for (int v : leaves) queue_.push_back(v);
        } else {
            int base = blossombase_[b];
            assert(mate_[base] >= 0);
            assign_label(endpoint_[mate_[base]], 1, mate_[base] ^ 1);
        }
    }

    /// Traces back from v and w simultaneously; returns the base of a new
    /// blossom, or -1 if an augmenting path was found instead.
    int scan_blossom(int v, int w) {
        std::vector<int> path;
        int base = -1;
        while (v != -1 || w != -1) {
            if (v != -1) {
                int b = inblossom_[v];
                if (label_[b] & 4) {
                    base = blossombase_[b];
                    break;
                }
                assert(label_[b] == 1);
                path.push_back(b);
                label_[b] = 5;
                assert(labelend_[b] == mate_[blossombase_[b]]);
                if (labelend_[b] == -1) {
                    v = -1;
                } else {
                    v = endpoint_[labelend_[b]];
                    b = inblossom_[v];
                    assert(label_[b] == 2);
                    assert(labelend_[b] >= 0);
                    v = endpoint_[labelend_[b]];
                }
            }
            if (w != -1) std::swap(v, w);
        }
        for (int b : path) label_[b] = 1;
        return base;
    }

    void add_blossom(int base, int k) {
        int v = edges_[k].u;
        int w = edges_[k].v;
        int bb = inblossom_[base];
        int bv = inblossom_[v];
        int bw = inblossom_[w];

        int b = unusedblossoms_.back();
        unusedblossoms_.pop_back();
        blossombase_[b] = base;
        blossomparent_[b] = -1;
        blossomparent_[bb] = b;

        std::vector<int>& path = blossomchilds_[b];
        std::vector<int>& endps = blossomendps_[b];
        path.clear();
        endps.clear();

        while (bv != bb) {
            blossomparent_[bv] = b;
            path.push_back(bv);
            endps.push_back(labelend_[bv]);
            assert(label_[bv] == 2 ||
                   (label_[bv] == 1 && labelend_[bv] == mate_[blossombase_[bv]]));
            assert(labelend_[bv] >= 0);
            v = endpoint_[labelend_[bv]];
            bv = inblossom_[v];
        }
        path.push_back(bb);
        std::reverse(path.begin(), path.end());
        std::reverse(endps.begin(), endps.end());
        endps.push_back(2 * k);
        while (bw != bb) {
            blossomparent_[bw] = b;
            path.push_back(bw);
            endps.push_back(labelend_[bw] ^ 1);
            assert(label_[bw] == 2 ||
                   (label_[bw] == 1 && labelend_[bw] == mate_[blossombase_[bw]]));
            assert(labelend_[bw] >= 0);
            w = endpoint_[labelend_[bw]];
            bw = inblossom_[w];
        }

        assert(label_[bb] == 1);
        label_[b] = 1;
        labelend_[b] = labelend_[bb];
        dualvar_[b] = 0;

        std::vector<int> leaves;
        blossom_leaves(b, leaves);
        for (int lv : leaves) {
            if (label_[inblossom_[lv]] == 2) queue_.push_back(lv);
            inblossom_[lv] = b;
        }

        // least-slack edges from the new blossom to each S-blossom
        std::vector<int> bestedgeto(2 * nvertex_, -1);
        for (int child : path) {
            std::vector<std::vector<int>> nblists;
            if (has_bestedges_[child]) {
                nblists.push_back(blossombestedges_[child]);
            } else {
                std::vector<int> lv2;
                blossom_leaves(child, lv2);
                for (int lv : lv2) {
                    std::vector<int> lst;
                    lst.reserve(neighbend_[lv].size());
                    for (int p : neighbend_[lv]) lst.push_back(p / 2);
                    nblists.push_back(std::move(lst));
                }
            }
            for (const std::vector<int>& nblist : nblists) {
                for (int ek : nblist) {
                    int i = edges_[ek].u, j = edges_[ek].v;
                    if (inblossom_[j] == b) std::swap(i, j);
                    int bj = inblossom_[j];
                    if (bj != b && label_[bj] == 1 &&
                        (bestedgeto[bj] == -1 || slack(ek) < slack(bestedgeto[bj])))
                        bestedgeto[bj] = ek;
                }
            }
            blossombestedges_[child].clear();
            has_bestedges_[child] = 0;
            bestedge_[child] = -1;
        }
        blossombestedges_[b].clear();
        for (int ek : bestedgeto)
            if (ek != -1) blossombestedges_[b].push_back(ek);
        has_bestedges_[b] = 1;
        bestedge_[b] = -1;
        for (int ek : blossombestedges_[b])
            if (bestedge_[b] == -1 || slack(ek) < slack(bestedge_[b])) bestedge_[b] = ek;
    }

    void expand_blossom(int b, bool endstage) {
        for (int s : blossomchilds_[b]) {
            blossomparent_[s] = -1;
            if (s < nvertex_) {
                inblossom_[s] = s;
            } else if (endstage && dualvar_[s] == 0) {
                expand_blossom(s, endstage);
            } else {
                std::vector<int> leaves;
                blossom_leaves(s, leaves);
                for (int v : leaves) inblossom_[v] = s;
            }
        }
        if (!endstage && label_[b] == 2) {
            // relabel the even-alternating half of the blossom path and
            // clear the labels on the rest
            assert(labelend_[b] >= 0);
            int entrychild = inblossom_[endpoint_[labelend_[b] ^ 1]];
            const int len = static_cast<int>(blossomchilds_[b].size());
            auto child_at = [&](int j) {
                return blossomchilds_[b][static_cast<std::size_t>(((j % len) + len) % len)];
            };
            auto endp_at = [&](int j) {
                return blossomendps_[b][static_cast<std::size_t>(((j % len) + len) % len)];
            };
            int j = 0;
            while (blossomchilds_[b][static_cast<std::size_t>(j)] != entrychild) ++j;
            int jstep, endptrick;
            if (j & 1) {
                j -= len;
                jstep = 1;
                endptrick = 0;
            } else {
                jstep = -1;
                endptrick = 1;
            }
            int p = labelend_[b];
            while (j != 0) {
                label_[endpoint_[p ^ 1]] = 0;
                label_[endpoint_[endp_at(j - endptrick) ^ endptrick ^ 1]] = 0;
                assign_label(endpoint_[p ^ 1], 2, p);
                allowedge_[endp_at(j - endptrick) / 2] = 1;
                j += jstep;
                p = endp_at(j - endptrick) ^ endptrick;
                allowedge_[p / 2] = 1;
                j += jstep;
            }
            int bv = child_at(j);
            label_[endpoint_[p ^ 1]] = 2;
            label_[bv] = 2;
            labelend_[endpoint_[p ^ 1]] = p;
            labelend_[bv] = p;
            bestedge_[bv] = -1;
            j += jstep;
            while (child_at(j) != entrychild) {
                bv = child_at(j);
                if (label_[bv] == 1) {
                    j += jstep;
                    continue;
                }
                std::vector<int> leaves;
                blossom_leaves(bv, leaves);
                int labeled = -1;
                for (int v : leaves)
                    if (label_[v] != 0) { labeled = v; break; }
                if (labeled >= 0) {
                    assert(label_[labeled] == 2);
                    assert(inblossom_[labeled] == bv);
                    label_[labeled] = 0;
                    label_[endpoint_[mate_[blossombase_[bv]]]] = 0;
                    assign_label(labeled, 2, labelend_[labeled]);
                }
                j += jstep;
            }
        }
        label_[b] = -1;
        labelend_[b] = -1;
        blossomchilds_[b].clear();
        blossomendps_[b].clear();
        blossombase_[b] = -1;
        blossombestedges_[b].clear();
        has_bestedges_[b] = 0;
        bestedge_[b] = -1;
        unusedblossoms_.push_back(b);
    }

    /// Rotates blossom b so that vertex v sits at its base.
    void augment_blossom(int b, int v) {
        int t = v;
        while (blossomparent_[t] != b) t = blossomparent_[t];
        if (t >= nvertex_) augment_blossom(t, v);

        const int len = static_cast<int>(blossomchilds_[b].size());
        auto child_at = [&](int j) {
            return blossomchilds_[b][static_cast<std::size_t>(((j % len) + len) % len)];
        };
        auto endp_at = [&](int j) {
            return blossomendps_[b][static_cast<std::size_t>(((j % len) + len) % len)];
        };
        int i = 0;
        while (blossomchilds_[b][static_cast<std::size_t>(i)] != t) ++i;
        int j = i;
        int jstep, endptrick;
        if (i & 1) {
            j -= len;
            jstep = 1;
            endptrick = 0;
        } else {
            jstep = -1;
            endptrick = 1;
        }
        while (j != 0) {
            j += jstep;
            t = child_at(j);
            int p = endp_at(j - endptrick) ^ endptrick;
            if (t >= nvertex_) augment_blossom(t, endpoint_[p]);
            j += jstep;
            t = child_at(j);
            if (t >= nvertex_) augment_blossom(t, endpoint_[p ^ 1]);
            mate_[endpoint_[p]] = p ^ 1;
            mate_[endpoint_[p ^ 1]] = p;
        }
        std::rotate(blossomchilds_[b].begin(),
                    blossomchilds_[b].begin() + static_cast<std::ptrdiff_t>(i),
                    blossomchilds_[b].end());
        std::rotate(blossomendps_[b].begin(),
                    blossomendps_[b].begin() + static_cast<std::ptrdiff_t>(i),
                    blossomendps_[b].end());
        blossombase_[b] = blossombase_[blossomchilds_[b].front()];
        assert(blossombase_[b] == v);
    }

    /// Swaps matched and unmatched edges along the alternating trees on
    /// both sides of tight edge k.
    void augment_matching(int k) {
        const int kv = edges_[k].u;
        const int kw = edges_[k].v;
        const std::pair<int, int> sides[2] = {{kv, 2 * k + 1}, {kw, 2 * k}};
        for (auto [s, p] : sides) {
            while (true) {
                int bs = inblossom_[s];
                assert(label_[bs] == 1);
                assert(labelend_[bs] == mate_[blossombase_[bs]]);
                if (bs >= nvertex_) augment_blossom(bs, s);
                mate_[s] = p;
                if (labelend_[bs] == -1) break;
                int t = endpoint_[labelend_[bs]];
                int bt = inblossom_[t];
                assert(label_[bt] == 2);
                assert(labelend_[bt] >= 0);
                s = endpoint_[labelend_[bt]];
                int j = endpoint_[labelend_[bt] ^ 1];
                assert(blossombase_[bt] == t);
                if (bt >= nvertex_) augment_blossom(bt, j);
                mate_[j] = labelend_[bt];
                p = labelend_[bt] ^ 1;
            }
        }
    }

    /// Checks the optimality certificate (dual feasibility + complementary
    /// slackness). Cheap relative to the solve; always on.
    void verify_optimum() const {
        std::int64_t vdualoffset = 0;
        if (maxcard_) {
            std::int64_t mn = dualvar_[0];
            for (int v = 1; v < nvertex_; ++v) mn = std::min(mn, dualvar_[v]);
            vdualoffset = std::max<std::int64_t>(0, -mn);
        }
        for (int v = 0; v < nvertex_; ++v)
            assert(dualvar_[v] + vdualoffset >= 0);
        for (int b = nvertex_; b < 2 * nvertex_; ++b)
            assert(blossombase_[b] < 0 || dualvar_[b] >= 0);
        for (int k = 0; k < nedge_; ++k) {
            int i = edges_[k].u, j = edges_[k].v;
            std::int64_t s = dualvar_[i] + dualvar_[j] - 2 * edges_[k].w;
            std::vector<int> iblossoms{i}, jblossoms{j};
            while (blossomparent_[iblossoms.back()] != -1)
                iblossoms.push_back(blossomparent_[iblossoms.back()]);
            while (blossomparent_[jblossoms.back()] != -1)
                jblossoms.push_back(blossomparent_[jblossoms.back()]);
            std::reverse(iblossoms.begin(), iblossoms.end());
            std::reverse(jblossoms.begin(), jblossoms.end());
            for (std::size_t t = 0; t < std::min(iblossoms.size(), jblossoms.size()); ++t) {
                if (iblossoms[t] != jblossoms[t]) break;
                if (iblossoms[t] >= nvertex_) s += 2 * dualvar_[iblossoms[t]];
            }
            assert(s >= 0);
            bool mi = mate_[i] >= 0 && mate_[i] / 2 == k;
            bool mj = mate_[j] >= 0 && mate_[j] / 2 == k;
            if (mi || mj) {
                assert(mi && mj);
                assert(s == 0);
            }
        }
        for (int v = 0; v < nvertex_; ++v)
            assert(mate_[v] >= 0 || dualvar_[v] + vdualoffset == 0);
        for (int b = nvertex_; b < 2 * nvertex_; ++b) {
            if (blossombase_[b] >= 0 && dualvar_[b] > 0) {
                assert(blossomendps_[b].size() % 2 == 1);
                for (std::size_t t = 1; t < blossomendps_[b].size(); t += 2) {
                    int p = blossomendps_[b][t];
                    assert(mate_[endpoint_[p]] == (p ^ 1));
                    assert(mate_[endpoint_[p ^ 1]] == p);
                }
            }
        }
    }

    int nvertex_;
    int nedge_ = 0;
    bool maxcard_;
    std::int64_t maxweight_ = 0;
    std::vector<WeightedEdge> edges_;
    std::vector<int> endpoint_;
    std::vector<std::vector<int>> neighbend_;
    std::vector<int> mate_;
    std::vector<int> label_;
    std::vector<int> labelend_;
    std::vector<int> inblossom_;
    std::vector<int> blossomparent_;
    std::vector<std::vector<int>> blossomchilds_;
    std::vector<int> blossombase_;
    std::vector<std::vector<int>> blossomendps_;
    std::vector<int> bestedge_;
    std::vector<std::vector<int>> blossombestedges_;
    std::vector<char> has_bestedges_;
    std::vector<int> unusedblossoms_;
    std::vector<std::int64_t> dualvar_;
    std::vector<char> allowedge_;
    std::vector<int> queue_;
};

} // namespace detail

/// Maximum weight matching; returns mate[v] (partner vertex or -1).
/// Vertices are 0-based here, matching the engine's internal convention.
inline std::vector<int> max_weight_matching(int n, const std::vector<WeightedEdge>& edges,
                                            bool max_cardinality = false) {
    detail::BlossomMatcher m(n, edges, max_cardinality);
    return m.solve();
}

/// Minimum weight perfect matching over an undirected (multi)graph with
/// 0-based vertices; loops are skipped. Returns the sorted edge ids of an
/// optimal matching, or nullopt when no perfect matching exists.
inline std::optional<std::vector<int>> min_weight_perfect_matching(
    int n, const std::vector<WeightedEdge>& edges) {
    if (n % 2 != 0) return std::nullopt;
    std::vector<WeightedEdge> work;
    std::vector<int> orig_id;
    work.reserve(edges.size());
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const WeightedEdge& e = edges[k];
        if (e.u == e.v) continue;
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw std::out_of_range("matching: vertex id out of range");
        std::int64_t neg = detail::narrow64(-detail::int128(e.w), "matching weight");
        work.push_back({e.u, e.v, neg});
        orig_id.push_back(static_cast<int>(k));
    }
    detail::BlossomMatcher m(n, work, /*max_cardinality=*/true);
    std::vector<int> mate = m.solve();
    for (int v = 0; v < n; ++v)
        if (mate[v] == -1) return std::nullopt;
    std::vector<int> ids;
    for (int k : m.matched_edges()) ids.push_back(orig_id[static_cast<std::size_t>(k)]);
    std::sort(ids.begin(), ids.end());
    return ids;
}

} // namespace mmc
