import gzip
import tempfile
from pathlib import Path

from django.test import TestCase, override_settings

from chambers import storage
from chambers.models import EnumerationRun, RunStatus
from chambers.services import PUBLISHED_COUNTS, EnumerationService, count_normal
from cohomology.services import CohomologyService
from core.exceptions import LengthVectorError, MalformedInputError, ResourceAbort
from core.subsets import signature


class EnumerationTestCase(TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)
        override = override_settings(CHAMBER_DB_DIR=Path(self.tmp.name))
        override.enable()
        self.addCleanup(override.disable)


class EnumerationServiceTests(EnumerationTestCase):
    def test_counts_match_published_table(self):
        service = EnumerationService(split_depth=3)
        for n in range(3, 7):
            outcome = service.enumerate_chambers(n)
            self.assertEqual(outcome.counts, PUBLISHED_COUNTS[n], f'n={n}')
            self.assertEqual(outcome.run.status, RunStatus.COMPLETE)
            self.assertEqual(outcome.run.chamber_count, PUBLISHED_COUNTS[n][0])

    def test_heptagon_counts(self):
        outcome = EnumerationService(split_depth=4).enumerate_chambers(7)
        self.assertEqual(outcome.counts, PUBLISHED_COUNTS[7])
        self.assertEqual(len(outcome.records), 135)

    def test_records_are_consistent(self):
        outcome = EnumerationService(split_depth=2).enumerate_chambers(6)
        betti = CohomologyService()
        for record in outcome.records:
            sig = signature(record.witness)
            self.assertTrue(sig.generic)
            self.assertEqual(sig.short_with_n, record.signature.short_with_n)
            self.assertEqual(record.betti, betti.betti(record.witness).b)
            if any(record.betti):
                self.assertEqual(record.betti, record.betti[::-1])
            self.assertGreater(record.margin, 0)

    def test_database_is_canonical_and_reloadable(self):
        service = EnumerationService(split_depth=2)
        outcome = service.enumerate_chambers(5)
        reloaded = storage.read_records(outcome.path)
        self.assertEqual([r.signature for r in reloaded], [r.signature for r in outcome.records])
        keys = [r.signature.sort_key() for r in reloaded]
        self.assertEqual(keys, sorted(keys))
        self.assertEqual(service.cached_records(5), reloaded)

    def test_output_does_not_depend_on_split_depth(self):
        first = EnumerationService(split_depth=1).enumerate_chambers(6, path=Path(self.tmp.name) / 'a.jsonl')
        second = EnumerationService(split_depth=4).enumerate_chambers(6, path=Path(self.tmp.name) / 'b.jsonl')
        self.assertEqual(first.path.read_text(encoding='utf-8'), second.path.read_text(encoding='utf-8'))

    def test_gzip_database(self):
        service = EnumerationService(split_depth=2)
        path = service.default_path(5, compress=True)
        self.assertEqual(path.name, 'chambers-5.jsonl.gz')
        outcome = service.enumerate_chambers(5, path=path)
        with gzip.open(path, 'rt', encoding='utf-8') as fh:
            self.assertEqual(len(fh.read().splitlines()), 7)
        self.assertEqual(count_normal(storage.read_records(path)), outcome.counts)

    def test_n_out_of_range(self):
        with self.assertRaises(LengthVectorError):
            EnumerationService().enumerate_chambers(2)
        with self.assertRaises(LengthVectorError):
            EnumerationService().enumerate_chambers(10)

    def test_time_limit_aborts_and_resume_completes(self):
        service = EnumerationService(split_depth=3, time_limit=0)
        with self.assertRaises(ResourceAbort):
            service.enumerate_chambers(6)
        run = EnumerationRun.objects.get(n=6)
        self.assertEqual(run.status, RunStatus.ABORTED)
        self.assertLess(len(run.completed_tasks), run.total_tasks)

        outcome = EnumerationService(split_depth=3).enumerate_chambers(6, resume=True)
        self.assertEqual(outcome.run.pk, run.pk)
        self.assertEqual(outcome.counts, PUBLISHED_COUNTS[6])
        self.assertEqual(len(outcome.run.completed_tasks), outcome.run.total_tasks)

    def test_table_prefers_cache(self):
        service = EnumerationService(split_depth=2)
        service.enumerate_chambers(4)
        rows = service.table(3, 5)
        self.assertEqual([row['source'] for row in rows], ['enumerated', 'cache', 'enumerated'])
        self.assertTrue(all(row['matches_published'] for row in rows))


class StorageTests(EnumerationTestCase):
    def test_malformed_line(self):
        path = Path(self.tmp.name) / 'broken.jsonl'
        path.write_text('{"n": 4}\nnot json\n', encoding='utf-8')
        with self.assertRaises(MalformedInputError):
            storage.read_records(path)

    def test_missing_file(self):
        with self.assertRaises(MalformedInputError) as ctx:
            storage.read_records(Path(self.tmp.name) / 'missing.jsonl')
        self.assertEqual(ctx.exception.code, 'db_not_found')

    def test_duplicate_records_are_removed(self):
        outcome = EnumerationService(split_depth=1).enumerate_chambers(4)
        storage.append_records(outcome.path, outcome.records)
        records = storage.canonical_records(storage.read_records(outcome.path))
        self.assertEqual(len(records), 3)
