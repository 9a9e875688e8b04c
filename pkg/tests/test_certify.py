import math

import numpy as np
import pytest

from turanlocal import (BoundId, ExtremalKind, Partition, bound_local_edge,
                        bound_main_weighted, certify_equality,
                        classify_unweighted_equality, predicted_equality,
                        verify_certificate)
from turanlocal.certify import certificate_threshold

from conftest import EXAMPLE1_W, S3, complete, complete_multipartite, graph


class TestCertifyExample1:
    def test_accepts_with_paper_constants(self, example1):
        out = certify_equality(example1)
        assert out.accepted and out.stage is None
        cert = out.certificate
        assert cert.r == 3 and cert.sign == 1
        assert [sorted(p) for p in cert.partition.parts] == [[0], [1, 2], [3, 4]]
        assert cert.c == pytest.approx(3 * S3, abs=1e-12)
        assert max(abs(a - b) for a, b in zip(cert.w, EXAMPLE1_W)) <= 1e-8
        for part in cert.partition.parts:
            assert sum(cert.w[v] ** 2 for v in part) == pytest.approx(S3, abs=1e-8)

    def test_external_witness_residuals(self, example1):
        parts = Partition((frozenset({0}), frozenset({1, 2}), frozenset({3, 4})))
        structural, norm_res = verify_certificate(example1, parts, EXAMPLE1_W, 1)
        assert structural <= 1e-9 and norm_res <= 1e-9

    def test_perturbed_witness_rejected(self, example1):
        parts = Partition((frozenset({0}), frozenset({1, 2}), frozenset({3, 4})))
        w = list(EXAMPLE1_W)
        w[2] += 0.1
        structural, _ = verify_certificate(example1, parts, w, 1)
        assert structural > 1e-2

    def test_scale_covariance(self, example1):
        base = certify_equality(example1).certificate
        for t in (0.5, 2.0, 10.0):
            scaled = example1.with_weights([t * w for _, _, w in example1.edges])
            assert bound_main_weighted(scaled).equality
            cert = certify_equality(scaled).certificate
            assert cert is not None
            assert cert.c == pytest.approx(t * base.c, rel=1e-12)
            for a, b in zip(cert.w, base.w):
                assert a == pytest.approx(math.sqrt(t) * b, rel=1e-10)

    def test_sign_covariance(self, example1):
        negated = example1.with_weights([-w for _, _, w in example1.edges])
        assert bound_main_weighted(negated).equality
        cert = certify_equality(negated).certificate
        assert cert is not None and cert.sign == -1
        base = certify_equality(example1).certificate
        assert cert.w == pytest.approx(base.w)
        assert [sorted(p) for p in cert.partition.parts] == [
            sorted(p) for p in base.partition.parts]


class TestCertifyOtherGraphs:
    def test_k33_accepted_constant_w(self):
        g = complete_multipartite(3, 3)
        out = certify_equality(g)
        assert out.accepted
        cert = out.certificate
        assert cert.r == 2
        assert np.allclose(cert.w, np.ones(6), atol=1e-10)
        assert cert.structural_residual <= 1e-10

    def test_c5_rejected_at_partition_stage(self, c5):
        assert not bound_main_weighted(c5).equality
        out = certify_equality(c5)
        assert not out.accepted and out.stage == "not_complete_multipartite"

    def test_mixed_signs_stage(self):
        g = complete(3).with_weights([1.0, 1.0, -1.0])
        out = certify_equality(g)
        assert not out.accepted and out.stage == "mixed_signs"

    def test_empty_stage(self):
        out = certify_equality(graph(3))
        assert not out.accepted and out.stage == "empty"

    def test_isolated_vertices_allowed(self):
        g = graph(5, (0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3))  # K4 + isolated 4
        out = certify_equality(g)
        assert out.accepted
        assert out.certificate.partition.support == frozenset({0, 1, 2, 3})

    def test_soundness_roundtrip_on_corpus(self, corpus6):
        # every accepted certificate passes independent verification
        for g in corpus6:
            if not bound_main_weighted(g).equality:
                continue
            out = certify_equality(g)
            if not out.accepted:
                assert out.stage == "empty" and g.m == 0
                continue
            cert = out.certificate
            structural, norm_res = verify_certificate(
                g, cert.partition, cert.w, cert.sign)
            thr = certificate_threshold(g)
            assert structural <= thr and norm_res <= thr

    def test_k3_hand_computed_witness(self):
        # singleton parts, w = (1,1,1): a_uv = 1 and part norms 1 = 3 - sqrt(2/3)*sqrt(6)
        parts = Partition((frozenset({0}), frozenset({1}), frozenset({2})))
        structural, norm_res = verify_certificate(complete(3), parts, (1.0, 1.0, 1.0), 1)
        assert structural == 0.0
        assert norm_res <= 1e-15

    def test_verify_rejects_bad_cover(self, example1):
        parts = Partition((frozenset({0}), frozenset({1, 2}), frozenset({3})))
        with pytest.raises(ValueError, match="non-isolated"):
            verify_certificate(example1, parts, EXAMPLE1_W[:4], 1)
        parts = Partition((frozenset({0, 1, 2, 3, 4}),))
        with pytest.raises(ValueError, match="witness entries"):
            verify_certificate(example1, parts, EXAMPLE1_W[:3], 1)


class TestClassifier:
    def test_k23(self):
        cls = classify_unweighted_equality(complete_multipartite(2, 3))
        assert cls.kind is ExtremalKind.COMPLETE_BIPARTITE
        assert cls.r == 2 and not cls.regular
        assert cls.edge_spectral_extremal()
        assert not cls.regular_complete_multipartite()

    def test_k222(self):
        cls = classify_unweighted_equality(complete_multipartite(2, 2, 2))
        assert cls.kind is ExtremalKind.COMPLETE_REGULAR_MULTIPARTITE
        assert cls.r == 3 and cls.regular
        assert cls.edge_spectral_extremal()
        assert cls.regular_complete_multipartite()

    def test_paw_not_extremal(self, paw):
        cls = classify_unweighted_equality(paw)
        assert cls.kind is ExtremalKind.NOT_EXTREMAL
        assert not cls.edge_spectral_extremal()

    def test_k4_minus_edge_irregular(self):
        g = graph(4, (0, 1), (0, 2), (0, 3), (1, 2), (1, 3))
        cls = classify_unweighted_equality(g)
        assert cls.kind is ExtremalKind.NOT_EXTREMAL  # parts 1,1,2

    def test_empty_vacuous(self):
        cls = classify_unweighted_equality(graph(4))
        assert cls.kind is ExtremalKind.REGULAR_COMPLETE_MULTIPARTITE
        assert cls.r == 0 and cls.edge_spectral_extremal()

    def test_isolated_vertices_ignored(self):
        g = graph(5, (0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3))
        cls = classify_unweighted_equality(g)
        assert cls.kind is ExtremalKind.COMPLETE_REGULAR_MULTIPARTITE
        assert cls.r == 4

    def test_completeness_on_corpus(self, corpus6):
        # equality flag of the local edge bound iff classifier says extremal
        for g in corpus6:
            rep = bound_local_edge(g)
            predicted = classify_unweighted_equality(g).edge_spectral_extremal()
            assert rep.equality == predicted, (g.edges, rep, predicted)

    def test_predicted_equality_adak_isolated(self):
        g = graph(4, (0, 1), (0, 2), (1, 2))  # K3 + isolated vertex
        assert predicted_equality(BoundId.ADAK_CHANDRAN, g) is False
        assert predicted_equality(BoundId.LOCAL_EDGE, g) is True
        assert predicted_equality(BoundId.STANLEY, g) is None
