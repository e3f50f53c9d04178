from django.apps import AppConfig


class BranchingsConfig(AppConfig):
    name = 'branchings'
