"""
Django management command exposing the rewriting toolkit.

Usage:
    python manage.py squier check presentations/fixtures/b3plus.pg
    python manage.py squier eq presentations/fixtures/b3plus.pg "s t s" "t s t"
    python manage.py squier homology presentations/fixtures/aa.pg --export out/ --json
"""
import argparse

from django.core.management.base import BaseCommand, CommandError

from console.reports import format_report
from console.runner import run


class Command(BaseCommand):
    help = "Presentations of monoids: normal forms, confluence, completion, coherence and homology"

    def add_arguments(self, parser):
        parser.add_argument('argv', nargs=argparse.REMAINDER, help='subcommand and its arguments')

    def handle(self, *args, **options):
        code, report = run(options['argv'])
        self.stdout.write(format_report(report, report.machine))
        if code:
            raise CommandError(f"squier exited with status {code}", returncode=code)
