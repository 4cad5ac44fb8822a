"""
Lets pytest collect the Django test modules: boots the project settings and
registers the hypothesis profiles (pick one with HYPOTHESIS_PROFILE).
"""
import os

import django
import hypothesis

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'skew_dyck.settings')
django.setup()

hypothesis.settings.register_profile('fast', max_examples=5)
hypothesis.settings.register_profile('ci', max_examples=200, deadline=None)
hypothesis.settings.register_profile('debugger', report_multiple_bugs=False)
hypothesis.settings.load_profile(os.environ.get('HYPOTHESIS_PROFILE', 'default'))
