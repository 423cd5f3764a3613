# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled codeword-enumeration kernels.

Same contract as _ref: messages in GF(q)^k in lexicographic order, digit 0
most significant, prefix = first k-1 digits.  Words are digit planes, byte
per digit for odd characteristic and packed uint64 bit planes for
characteristic 2.  Enumeration keeps a stack of prefix partial sums, so a
codeword costs roughly one fused add-and-count pass over its planes.
"""

import numpy as np

cdef extern from *:
    """
    #include <stdint.h>
    #include <stdlib.h>
    #include <string.h>

    #if defined(__GNUC__) && defined(__x86_64__)
    #include <immintrin.h>
    #define DC_X86 1
    #endif

    static inline int dc_popcount64(unsigned long long x) {
    #if defined(__GNUC__) || defined(__clang__)
        return __builtin_popcountll(x);
    #else
        x = x - ((x >> 1) & 0x5555555555555555ULL);
        x = (x & 0x3333333333333333ULL) + ((x >> 2) & 0x3333333333333333ULL);
        x = (x + (x >> 4)) & 0x0f0f0f0f0f0f0f0fULL;
        return (int)((x * 0x0101010101010101ULL) >> 56);
    #endif
    }

    /* ---- byte planes ----
       A word is sdim planes of npad bytes; plane t at [t*npad, (t+1)*npad),
       npad % 64 == 0, padding bytes zero.  Weight = positions where some
       plane of (base+row) mod p is nonzero.  The counting functions take
       all q last-digit rows at once so per-call overhead amortizes.  SIMD
       variants fold mod p with an unsigned min: s in [0, 2p-2] and s-p
       wraps above s exactly when s < p, which needs 2p - 2 < 256. ---- */

    static void dc_cntb_scalar(const unsigned char* base, const unsigned char* rows,
                               long long rowstride, int q, long long npad, int sdim,
                               int p, long long* counts) {
        int d, t, v;
        long long j, wt;
        unsigned char acc;
        for (d = 0; d < q; d++) {
            const unsigned char* row = rows + (long long)d * rowstride;
            wt = 0;
            for (j = 0; j < npad; j++) {
                acc = 0;
                for (t = 0; t < sdim; t++) {
                    v = base[t * npad + j] + row[t * npad + j];
                    if (v >= p) v -= p;
                    acc |= (unsigned char)v;
                }
                wt += (acc != 0);
            }
            counts[wt]++;
        }
    }

    static void dc_addrow_scalar(unsigned char* dst, const unsigned char* src,
                                 const unsigned char* row, long long L, int p) {
        long long j;
        int v;
        for (j = 0; j < L; j++) {
            v = src[j] + row[j];
            if (v >= p) v -= p;
            dst[j] = (unsigned char)v;
        }
    }

    #ifdef DC_X86
    __attribute__((target("sse2")))
    static void dc_cntb_sse2(const unsigned char* base, const unsigned char* rows,
                             long long rowstride, int q, long long npad, int sdim,
                             int p, long long* counts) {
        __m128i vp = _mm_set1_epi8((char)p);
        __m128i zero = _mm_setzero_si128();
        __m128i one = _mm_set1_epi8(1);
        int d, t;
        long long j;
        for (d = 0; d < q; d++) {
            const unsigned char* row = rows + (long long)d * rowstride;
            __m128i cnt = _mm_setzero_si128();
            for (j = 0; j < npad; j += 16) {
                __m128i acc = _mm_setzero_si128();
                for (t = 0; t < sdim; t++) {
                    __m128i vb = _mm_loadu_si128((const __m128i*)(base + t * npad + j));
                    __m128i vr = _mm_loadu_si128((const __m128i*)(row + t * npad + j));
                    __m128i vs = _mm_add_epi8(vb, vr);
                    acc = _mm_or_si128(acc, _mm_min_epu8(vs, _mm_sub_epi8(vs, vp)));
                }
                __m128i nz = _mm_andnot_si128(_mm_cmpeq_epi8(acc, zero), one);
                cnt = _mm_add_epi64(cnt, _mm_sad_epu8(nz, zero));
            }
            counts[(long long)(uint64_t)_mm_cvtsi128_si64(cnt)
                 + (long long)(uint64_t)_mm_cvtsi128_si64(_mm_srli_si128(cnt, 8))]++;
        }
    }

    __attribute__((target("sse2")))
    static void dc_addrow_sse2(unsigned char* dst, const unsigned char* src,
                               const unsigned char* row, long long L, int p) {
        __m128i vp = _mm_set1_epi8((char)p);
        long long j;
        for (j = 0; j < L; j += 16) {
            __m128i vs = _mm_add_epi8(_mm_loadu_si128((const __m128i*)(src + j)),
                                      _mm_loadu_si128((const __m128i*)(row + j)));
            _mm_storeu_si128((__m128i*)(dst + j), _mm_min_epu8(vs, _mm_sub_epi8(vs, vp)));
        }
    }

    __attribute__((target("avx2,popcnt")))
    static void dc_cntb_avx2(const unsigned char* base, const unsigned char* rows,
                             long long rowstride, int q, long long npad, int sdim,
                             int p, long long* counts) {
        __m256i vp = _mm256_set1_epi8((char)p);
        __m256i zero = _mm256_setzero_si256();
        int d, t;
        long long j, wt;
        for (d = 0; d < q; d++) {
            const unsigned char* row = rows + (long long)d * rowstride;
            wt = 0;
            for (j = 0; j < npad; j += 32) {
                __m256i acc = _mm256_setzero_si256();
                for (t = 0; t < sdim; t++) {
                    __m256i vb = _mm256_loadu_si256((const __m256i*)(base + t * npad + j));
                    __m256i vr = _mm256_loadu_si256((const __m256i*)(row + t * npad + j));
                    __m256i vs = _mm256_add_epi8(vb, vr);
                    acc = _mm256_or_si256(acc, _mm256_min_epu8(vs, _mm256_sub_epi8(vs, vp)));
                }
                unsigned zm = (unsigned)_mm256_movemask_epi8(_mm256_cmpeq_epi8(acc, zero));
                wt += 32 - __builtin_popcount(zm);
            }
            counts[wt]++;
        }
    }

    __attribute__((target("avx2")))
    static void dc_addrow_avx2(unsigned char* dst, const unsigned char* src,
                               const unsigned char* row, long long L, int p) {
        __m256i vp = _mm256_set1_epi8((char)p);
        long long j;
        for (j = 0; j < L; j += 32) {
            __m256i vs = _mm256_add_epi8(_mm256_loadu_si256((const __m256i*)(src + j)),
                                         _mm256_loadu_si256((const __m256i*)(row + j)));
            _mm256_storeu_si256((__m256i*)(dst + j),
                                _mm256_min_epu8(vs, _mm256_sub_epi8(vs, vp)));
        }
    }

    __attribute__((target("avx512bw,popcnt")))
    static void dc_cntb_avx512(const unsigned char* base, const unsigned char* rows,
                               long long rowstride, int q, long long npad, int sdim,
                               int p, long long* counts) {
        __m512i vp = _mm512_set1_epi8((char)p);
        __m512i zero = _mm512_setzero_si512();
        int d, t;
        long long j, wt;
        if (npad == 64 && sdim == 1) {
            /* the whole word is one vector: hoist the prefix load */
            __m512i vb = _mm512_loadu_si512((const void*)base);
            for (d = 0; d < q; d++) {
                __m512i vs = _mm512_add_epi8(
                    vb, _mm512_loadu_si512((const void*)(rows + (long long)d * rowstride)));
                __m512i vm = _mm512_min_epu8(vs, _mm512_sub_epi8(vs, vp));
                counts[__builtin_popcountll(
                    (unsigned long long)_mm512_cmpneq_epi8_mask(vm, zero))]++;
            }
            return;
        }
        for (d = 0; d < q; d++) {
            const unsigned char* row = rows + (long long)d * rowstride;
            wt = 0;
            for (j = 0; j < npad; j += 64) {
                __m512i acc = _mm512_setzero_si512();
                for (t = 0; t < sdim; t++) {
                    __m512i vb = _mm512_loadu_si512((const void*)(base + t * npad + j));
                    __m512i vr = _mm512_loadu_si512((const void*)(row + t * npad + j));
                    __m512i vs = _mm512_add_epi8(vb, vr);
                    acc = _mm512_or_si512(acc, _mm512_min_epu8(vs, _mm512_sub_epi8(vs, vp)));
                }
                wt += (long long)__builtin_popcountll(
                    (unsigned long long)_mm512_cmpneq_epi8_mask(acc, zero));
            }
            counts[wt]++;
        }
    }

    __attribute__((target("avx512bw")))
    static void dc_addrow_avx512(unsigned char* dst, const unsigned char* src,
                                 const unsigned char* row, long long L, int p) {
        __m512i vp = _mm512_set1_epi8((char)p);
        long long j;
        for (j = 0; j < L; j += 64) {
            __m512i vs = _mm512_add_epi8(_mm512_loadu_si512((const void*)(src + j)),
                                         _mm512_loadu_si512((const void*)(row + j)));
            _mm512_storeu_si512((void*)(dst + j),
                                _mm512_min_epu8(vs, _mm512_sub_epi8(vs, vp)));
        }
    }
    #endif

    /* ---- packed bit planes: word = sdim planes of W uint64s, plane t at
       [t*W, (t+1)*W); weight of base XOR row over all q last-digit rows. */

    static void dc_cntp_scalar(const uint64_t* base, const uint64_t* rows,
                               long long rowstride, int q, long long W, int sdim,
                               long long* counts) {
        int d, t;
        long long w, wt;
        uint64_t m;
        for (d = 0; d < q; d++) {
            const uint64_t* row = rows + (long long)d * rowstride;
            wt = 0;
            for (w = 0; w < W; w++) {
                m = 0;
                for (t = 0; t < sdim; t++)
                    m |= base[t * W + w] ^ row[t * W + w];
                wt += dc_popcount64(m);
            }
            counts[wt]++;
        }
    }

    #ifdef DC_X86
    __attribute__((target("popcnt")))
    static void dc_cntp_popcnt(const uint64_t* base, const uint64_t* rows,
                               long long rowstride, int q, long long W, int sdim,
                               long long* counts) {
        int d, t;
        long long w, wt;
        uint64_t m;
        if (W == 1 && sdim == 1) {
            m = base[0];
            for (d = 0; d < q; d++)
                counts[__builtin_popcountll(m ^ rows[(long long)d * rowstride])]++;
            return;
        }
        if (W == 2 && sdim == 2) {
            uint64_t b0 = base[0], b1 = base[1], b2 = base[2], b3 = base[3];
            for (d = 0; d < q; d++) {
                const uint64_t* row = rows + (long long)d * rowstride;
                counts[__builtin_popcountll((b0 ^ row[0]) | (b2 ^ row[2]))
                     + __builtin_popcountll((b1 ^ row[1]) | (b3 ^ row[3]))]++;
            }
            return;
        }
        for (d = 0; d < q; d++) {
            const uint64_t* row = rows + (long long)d * rowstride;
            wt = 0;
            for (w = 0; w < W; w++) {
                m = 0;
                for (t = 0; t < sdim; t++)
                    m |= base[t * W + w] ^ row[t * W + w];
                wt += (long long)__builtin_popcountll(m);
            }
            counts[wt]++;
        }
    }
    #endif

    typedef void (*dc_cntb_fn)(const unsigned char*, const unsigned char*,
                               long long, int, long long, int, int, long long*);
    typedef void (*dc_addrow_fn)(unsigned char*, const unsigned char*,
                                 const unsigned char*, long long, int);
    typedef void (*dc_cntp_fn)(const uint64_t*, const uint64_t*,
                               long long, int, long long, int, long long*);
    static dc_cntb_fn dc_cntb_ptr = 0;
    static dc_addrow_fn dc_addrow_ptr = 0;
    static dc_cntp_fn dc_cntp_ptr = 0;
    static const char* dc_simd_label = "unset";

    /* GIL held; idempotent.  DESIGNCODES_SIMD caps the level for testing. */
    static void dc_select(void) {
        int lvl = 99;
        const char* e;
        if (dc_cntb_ptr) return;
        e = getenv("DESIGNCODES_SIMD");
        if (e) {
            if (!strcmp(e, "scalar")) lvl = 0;
            else if (!strcmp(e, "sse2")) lvl = 1;
            else if (!strcmp(e, "avx2")) lvl = 2;
            else if (!strcmp(e, "avx512")) lvl = 3;
        }
    #ifdef DC_X86
        if (lvl >= 3 && __builtin_cpu_supports("avx512bw")) {
            dc_cntb_ptr = dc_cntb_avx512; dc_addrow_ptr = dc_addrow_avx512;
            dc_simd_label = "avx512";
        } else if (lvl >= 2 && __builtin_cpu_supports("avx2")) {
            dc_cntb_ptr = dc_cntb_avx2; dc_addrow_ptr = dc_addrow_avx2;
            dc_simd_label = "avx2";
        } else if (lvl >= 1) {          /* SSE2 is x86-64 baseline */
            dc_cntb_ptr = dc_cntb_sse2; dc_addrow_ptr = dc_addrow_sse2;
            dc_simd_label = "sse2";
        } else {
            dc_cntb_ptr = dc_cntb_scalar; dc_addrow_ptr = dc_addrow_scalar;
            dc_simd_label = "scalar";
        }
        dc_cntp_ptr = (lvl >= 1 && __builtin_cpu_supports("popcnt"))
                    ? dc_cntp_popcnt : dc_cntp_scalar;
    #else
        dc_cntb_ptr = dc_cntb_scalar; dc_addrow_ptr = dc_addrow_scalar;
        dc_cntp_ptr = dc_cntp_scalar;
        dc_simd_label = "scalar";
    #endif
    }

    static inline void dc_count_rows_bytes(const unsigned char* base,
                                           const unsigned char* rows,
                                           long long rowstride, int q, long long npad,
                                           int sdim, int p, long long* counts) {
        if (p > 128) { dc_cntb_scalar(base, rows, rowstride, q, npad, sdim, p, counts);
                       return; }
        dc_cntb_ptr(base, rows, rowstride, q, npad, sdim, p, counts);
    }

    static inline void dc_addrow_mod(unsigned char* dst, const unsigned char* src,
                                     const unsigned char* row, long long L, int p) {
        if (p > 128) { dc_addrow_scalar(dst, src, row, L, p); return; }
        dc_addrow_ptr(dst, src, row, L, p);
    }

    static inline void dc_count_rows_packed(const uint64_t* base, const uint64_t* rows,
                                            long long rowstride, int q, long long W,
                                            int sdim, long long* counts) {
        dc_cntp_ptr(base, rows, rowstride, q, W, sdim, counts);
    }
    """
    int dc_popcount64(unsigned long long x) noexcept nogil
    void dc_select()
    const char* dc_simd_label
    void dc_count_rows_bytes(const unsigned char* base, const unsigned char* rows,
                             long long rowstride, int q, long long npad,
                             int sdim, int p, long long* counts) noexcept nogil
    void dc_addrow_mod(unsigned char* dst, const unsigned char* src,
                       const unsigned char* row, long long L, int p) noexcept nogil
    void dc_count_rows_packed(const unsigned long long* base,
                              const unsigned long long* rows,
                              long long rowstride, int q, long long W,
                              int sdim, long long* counts) noexcept nogil


def simd_level():
    """Name of the instruction set the weight loops dispatched to."""
    dc_select()
    return (<bytes> dc_simd_label).decode("ascii")


# ---------------------------------------------------------------------------
# byte kernels (odd characteristic)

cdef inline void _addrow(unsigned char* dst, const unsigned char* src,
                         const unsigned char* row, Py_ssize_t L, int p) noexcept nogil:
    dc_addrow_mod(dst, src, row, L, p)


cdef inline void _advance_bytes(const unsigned char[:, :, ::1] scaled, int p, int q,
                                Py_ssize_t k, long long* dg,
                                unsigned char[:, ::1] st) noexcept nogil:
    cdef Py_ssize_t i = k - 2
    cdef Py_ssize_t lvl
    cdef Py_ssize_t L = scaled.shape[2]
    while dg[i] == q - 1:
        dg[i] = 0
        i -= 1
    dg[i] += 1
    for lvl in range(i, k - 1):
        _addrow(&st[lvl + 1, 0], &st[lvl, 0], &scaled[lvl, dg[lvl], 0], L, p)


cdef void _count_bytes(const unsigned char[:, :, ::1] scaled, int p, int sdim,
                       unsigned long long pre_lo, unsigned long long pre_hi,
                       long long* dg, unsigned char[:, ::1] st,
                       long long[::1] counts) noexcept nogil:
    cdef Py_ssize_t k = scaled.shape[0]
    cdef int q = <int> scaled.shape[1]
    cdef long long rowstride = scaled.shape[2]
    cdef long long npad = rowstride / sdim
    cdef unsigned long long cur = pre_lo
    while cur < pre_hi:
        dc_count_rows_bytes(&st[k - 1, 0], &scaled[k - 1, 0, 0], rowstride,
                            q, npad, sdim, p, &counts[0])
        cur += 1
        if cur >= pre_hi:
            break
        _advance_bytes(scaled, p, q, k, dg, st)


cdef long long _collect_bytes_impl(const unsigned char[:, :, ::1] scaled, int p, int sdim,
                                   unsigned long long pre_lo, unsigned long long pre_hi,
                                   long long* dg, unsigned char[:, ::1] st,
                                   long long want, unsigned char[:, ::1] out,
                                   unsigned char* tmp) noexcept nogil:
    cdef Py_ssize_t k = scaled.shape[0]
    cdef int q = <int> scaled.shape[1]
    cdef Py_ssize_t L = scaled.shape[2]
    cdef Py_ssize_t npos = L / sdim
    cdef long long cap = out.shape[0]
    cdef long long found = 0
    cdef unsigned long long cur = pre_lo
    cdef const unsigned char* base
    cdef const unsigned char* row
    cdef Py_ssize_t j, t
    cdef int d, v, nz
    cdef long long wt
    while cur < pre_hi:
        base = &st[k - 1, 0]
        for d in range(q):
            row = &scaled[k - 1, d, 0]
            wt = 0
            for j in range(npos):
                nz = 0
                for t in range(sdim):
                    v = base[t * npos + j] + row[t * npos + j]
                    if v >= p:
                        v -= p
                    nz |= v
                    tmp[t * npos + j] = <unsigned char> v
                wt += (nz != 0)
            if wt == want:
                if found < cap:
                    for j in range(L):
                        out[found, j] = tmp[j]
                found += 1
        cur += 1
        if cur >= pre_hi:
            break
        _advance_bytes(scaled, p, q, k, dg, st)
    return found


# ---------------------------------------------------------------------------
# packed kernels (characteristic 2)

cdef inline void _advance_packed(const unsigned long long[:, :, ::1] scaled, int q,
                                 Py_ssize_t k, long long* dg,
                                 unsigned long long[:, ::1] st) noexcept nogil:
    cdef Py_ssize_t i = k - 2
    cdef Py_ssize_t lvl, j
    cdef Py_ssize_t L = scaled.shape[2]
    while dg[i] == q - 1:
        dg[i] = 0
        i -= 1
    dg[i] += 1
    for lvl in range(i, k - 1):
        for j in range(L):
            st[lvl + 1, j] = st[lvl, j] ^ scaled[lvl, dg[lvl], j]


cdef void _count_packed(const unsigned long long[:, :, ::1] scaled, int sdim,
                        unsigned long long pre_lo, unsigned long long pre_hi,
                        long long* dg, unsigned long long[:, ::1] st,
                        long long[::1] counts) noexcept nogil:
    cdef Py_ssize_t k = scaled.shape[0]
    cdef int q = <int> scaled.shape[1]
    cdef long long rowstride = scaled.shape[2]
    cdef long long W = rowstride / sdim
    cdef unsigned long long cur = pre_lo
    while cur < pre_hi:
        dc_count_rows_packed(&st[k - 1, 0], &scaled[k - 1, 0, 0], rowstride,
                             q, W, sdim, &counts[0])
        cur += 1
        if cur >= pre_hi:
            break
        _advance_packed(scaled, q, k, dg, st)


cdef long long _collect_packed_impl(const unsigned long long[:, :, ::1] scaled, int sdim,
                                    unsigned long long pre_lo, unsigned long long pre_hi,
                                    long long* dg, unsigned long long[:, ::1] st,
                                    long long want, unsigned long long[:, ::1] out,
                                    unsigned long long* tmp) noexcept nogil:
    cdef Py_ssize_t k = scaled.shape[0]
    cdef int q = <int> scaled.shape[1]
    cdef Py_ssize_t L = scaled.shape[2]
    cdef Py_ssize_t W = L / sdim
    cdef long long cap = out.shape[0]
    cdef long long found = 0
    cdef unsigned long long cur = pre_lo
    cdef const unsigned long long* base
    cdef const unsigned long long* row
    cdef Py_ssize_t j, t
    cdef int d
    cdef long long wt
    cdef unsigned long long acc, w0
    while cur < pre_hi:
        base = &st[k - 1, 0]
        for d in range(q):
            row = &scaled[k - 1, d, 0]
            wt = 0
            for j in range(W):
                acc = 0
                for t in range(sdim):
                    w0 = base[t * W + j] ^ row[t * W + j]
                    tmp[t * W + j] = w0
                    acc |= w0
                wt += dc_popcount64(acc)
            if wt == want:
                if found < cap:
                    for j in range(L):
                        out[found, j] = tmp[j]
                found += 1
        cur += 1
        if cur >= pre_hi:
            break
        _advance_packed(scaled, q, k, dg, st)
    return found


# ---------------------------------------------------------------------------
# python entry points (one enumeration chunk each; GIL released inside)

def _init_digits(k, q, pre_lo):
    dg = np.zeros(max(k - 1, 1), dtype=np.int64)
    b = int(pre_lo)
    for i in range(k - 2, -1, -1):
        dg[i] = b % q
        b //= q
    return dg


def count_bytes(scaled, p, sdim, npad, pre_lo, pre_hi, counts):
    cdef const unsigned char[:, :, ::1] sc = scaled
    k, q, L = scaled.shape
    dg = _init_digits(k, q, pre_lo)
    st = np.zeros((k, L), dtype=np.uint8)
    cdef unsigned char[:, ::1] stv = st
    cdef long long[::1] dgv = dg
    cdef long long[::1] cv = counts
    cdef int cp = p, cs = sdim
    cdef unsigned long long lo = pre_lo, hi = pre_hi
    dc_select()
    # build the initial stack
    for lvl in range(k - 1):
        _addrow(&stv[lvl + 1, 0], &stv[lvl, 0], &sc[lvl, dg[lvl], 0], L, cp)
    with nogil:
        _count_bytes(sc, cp, cs, lo, hi, &dgv[0], stv, cv)


def collect_bytes(scaled, p, sdim, npad, pre_lo, pre_hi, want, out, found_box):
    cdef const unsigned char[:, :, ::1] sc = scaled
    k, q, L = scaled.shape
    dg = _init_digits(k, q, pre_lo)
    st = np.zeros((k, L), dtype=np.uint8)
    tmp = np.zeros(L, dtype=np.uint8)
    cdef unsigned char[:, ::1] stv = st
    cdef unsigned char[:, ::1] outv = out
    cdef unsigned char[::1] tmpv = tmp
    cdef long long[::1] dgv = dg
    cdef int cp = p, cs = sdim
    cdef long long cw = want
    cdef unsigned long long lo = pre_lo, hi = pre_hi
    cdef long long found
    dc_select()
    for lvl in range(k - 1):
        _addrow(&stv[lvl + 1, 0], &stv[lvl, 0], &sc[lvl, dg[lvl], 0], L, cp)
    with nogil:
        found = _collect_bytes_impl(sc, cp, cs, lo, hi, &dgv[0], stv, cw, outv, &tmpv[0])
    found_box[0] += found


def count_packed(scaled, sdim, W, pre_lo, pre_hi, counts):
    cdef const unsigned long long[:, :, ::1] sc = scaled
    k, q, L = scaled.shape
    dg = _init_digits(k, q, pre_lo)
    st = np.zeros((k, L), dtype=np.uint64)
    cdef unsigned long long[:, ::1] stv = st
    cdef long long[::1] dgv = dg
    cdef long long[::1] cv = counts
    cdef int cs = sdim
    cdef unsigned long long lo = pre_lo, hi = pre_hi
    cdef Py_ssize_t j
    dc_select()
    for lvl in range(k - 1):
        for j in range(L):
            stv[lvl + 1, j] = stv[lvl, j] ^ sc[lvl, dg[lvl], j]
    with nogil:
        _count_packed(sc, cs, lo, hi, &dgv[0], stv, cv)


def collect_packed(scaled, sdim, W, pre_lo, pre_hi, want, out, found_box):
    cdef const unsigned long long[:, :, ::1] sc = scaled
    k, q, L = scaled.shape
    dg = _init_digits(k, q, pre_lo)
    st = np.zeros((k, L), dtype=np.uint64)
    tmp = np.zeros(L, dtype=np.uint64)
    cdef unsigned long long[:, ::1] stv = st
    cdef unsigned long long[:, ::1] outv = out
    cdef unsigned long long[::1] tmpv = tmp
    cdef long long[::1] dgv = dg
    cdef int cs = sdim
    cdef long long cw = want
    cdef unsigned long long lo = pre_lo, hi = pre_hi
    cdef long long found
    cdef Py_ssize_t j
    dc_select()
    for lvl in range(k - 1):
        for j in range(L):
            stv[lvl + 1, j] = stv[lvl, j] ^ sc[lvl, dg[lvl], j]
    with nogil:
        found = _collect_packed_impl(sc, cs, lo, hi, &dgv[0], stv, cw, outv, &tmpv[0])
    found_box[0] += found


# ---------------------------------------------------------------------------
# exact linear algebra

def rref_tabled(int[:, ::1] R, const int[::1] mul, const int[::1] sub,
                const int[::1] inv, int q, int[::1] pivots):
    """In-place canonical RREF driven by flat q*q field-op tables.

    mul[a*q+b] = a*b, sub[a*q+b] = a-b, inv[a] = a^-1 (inv[0] unused).
    Fills `pivots` with the pivot columns and returns their count.
    """
    cdef Py_ssize_t rows = R.shape[0], cols = R.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, pr
    cdef int pv, fct, tmp, npiv = 0
    with nogil:
        for c in range(cols):
            if r == rows:
                break
            pr = -1
            for i in range(r, rows):
                if R[i, c] != 0:
                    pr = i
                    break
            if pr < 0:
                continue
            if pr != r:
                # rows >= r are zero left of c, so the swap can start at c
                for j in range(c, cols):
                    tmp = R[r, j]; R[r, j] = R[pr, j]; R[pr, j] = tmp
            pv = R[r, c]
            if pv != 1:
                fct = inv[pv]
                for j in range(c, cols):
                    R[r, j] = mul[fct * q + R[r, j]]
            for i in range(rows):
                if i == r:
                    continue
                fct = R[i, c]
                if fct == 0:
                    continue
                # the pivot row is zero left of c, so start there
                if fct == 1:
                    for j in range(c, cols):
                        R[i, j] = sub[R[i, j] * q + R[r, j]]
                else:
                    for j in range(c, cols):
                        R[i, j] = sub[R[i, j] * q + mul[fct * q + R[r, j]]]
            pivots[npiv] = <int> c
            npiv += 1
            r += 1
    return npiv
